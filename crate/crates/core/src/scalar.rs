//! Coefficient fields for multivectors: exact rationals and `f64`.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Default tolerance used by approximate-mode comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Approx,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Approx => "approx",
        }
    }
}

impl Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "approx" => Ok(Mode::Approx),
            other => Err(Error::Parse(format!("unknown mode '{other}'"))),
        }
    }
}

/// A real coefficient field. Implemented for [`Rational`] (exact) and `f64`
/// (approximate).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact fields ignore `tol`.
    fn close_to(&self, other: &Self, tol: f64) -> bool;
    fn parse(text: &str) -> Result<Self>;
    fn render(&self) -> String;
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn parse(text: &str) -> Result<Self> {
        text.trim().parse::<BigRational>().map_err(|e| Error::Parse(format!("bad rational '{text}': {e}")))
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    const MODE: Mode = Mode::Approx;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }
    fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad number '{t}'")))?;
            let d: f64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad number '{t}'")))?;
            return Ok(n / d);
        }
        t.parse().map_err(|_| Error::Parse(format!("bad number '{t}'")))
    }
    fn render(&self) -> String {
        format!("{self}")
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_i64(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let r = <Rational as Scalar>::parse("6/4").unwrap();
        assert_eq!(r.render(), "3/2");
        assert_eq!(rat(2) * rat(3), rat(6));
    }

    #[test]
    fn float_tolerance() {
        assert!(1.0f64.close_to(&(1.0 + 1e-15), DEFAULT_TOLERANCE));
        assert!(!1.0f64.close_to(&1.1, DEFAULT_TOLERANCE));
        assert_eq!(<f64 as Scalar>::parse("1/4").unwrap(), 0.25);
    }

    #[test]
    fn mode_round_trip() {
        assert_eq!("exact".parse::<Mode>().unwrap(), Mode::Exact);
        assert!("fuzzy".parse::<Mode>().is_err());
    }
}
