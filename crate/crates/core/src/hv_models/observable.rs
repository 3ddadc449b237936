use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multi_system::MAX_SYSTEMS;

/// A ±1 value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_bit(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self != rhs)
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "−1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// 1-based index of the matching geometric-algebra generator.
    pub fn index(self) -> usize {
        match self {
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

/// One Pauli operator `σ_axis` acting on `system` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliSymbol {
    system: u8,
    axis: Axis,
}

impl PauliSymbol {
    pub fn new(system: usize, axis: Axis) -> Result<Self> {
        if !(1..=MAX_SYSTEMS).contains(&system) {
            return Err(Error::SystemOutOfRange { index: system, count: MAX_SYSTEMS });
        }
        Ok(Self { system: system as u8, axis })
    }

    pub fn system(self) -> usize {
        self.system as usize
    }

    pub fn axis(self) -> Axis {
        self.axis
    }
}

impl fmt::Display for PauliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis.letter(), self.system)
    }
}

impl FromStr for PauliSymbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let axis = match chars.next() {
            Some('x') => Axis::X,
            Some('y') => Axis::Y,
            Some('z') => Axis::Z,
            _ => return Err(Error::Parse(format!("bad Pauli symbol '{s}'"))),
        };
        let system: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad Pauli symbol '{s}'")))?;
        PauliSymbol::new(system, axis)
    }
}

/// A product of Pauli operators on pairwise distinct systems, kept in
/// ascending system order. Two products over the same symbols are the same
/// observable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObservableProduct {
    factors: Vec<PauliSymbol>,
}

impl ObservableProduct {
    pub fn new(mut factors: Vec<PauliSymbol>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("empty observable".into()));
        }
        factors.sort();
        for pair in factors.windows(2) {
            if pair[0].system == pair[1].system {
                return Err(Error::RepeatedSystem(pair[0].system()));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[PauliSymbol] {
        &self.factors
    }

    pub fn max_system(&self) -> usize {
        self.factors.iter().map(|p| p.system()).max().unwrap_or(0)
    }

    pub fn is_elementary(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for ObservableProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for ObservableProduct {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let factors = s.split('*').map(str::parse).collect::<Result<Vec<PauliSymbol>>>()?;
        ObservableProduct::new(factors)
    }
}

impl Serialize for ObservableProduct {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ObservableProduct {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let p: ObservableProduct = "x1*y2".parse().unwrap();
        assert_eq!(p.to_string(), "x1*y2");
        let q: ObservableProduct = "y2*x1".parse().unwrap();
        assert_eq!(p, q);
        assert_eq!(p.max_system(), 2);
        assert_eq!("x1*y1".parse::<ObservableProduct>(), Err(Error::RepeatedSystem(1)));
        assert!("w1".parse::<ObservableProduct>().is_err());
        assert!("x4".parse::<ObservableProduct>().is_err());
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "-1");
        assert!(serde_json::from_str::<Sign>("2").is_err());
    }
}
