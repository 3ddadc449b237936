//! The regime where generators of different systems are identified.
//!
//! An [`IdentityMap`] sends `f1, f2` and `g1, g2` to signed in-plane
//! generators `±e1, ±e2` of a single Cl(3,0) copy. Once identified, the
//! generators obey the single-copy algebra and no longer commute across
//! systems. This module computes the Bell-GHZ column under such a map,
//! searches all 64 maps for a prescribed column, exhibits the commutator
//! witness against identification plus commutation, and reads off each
//! system's orientation in the 1,2-plane.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ga::Multivector;
use crate::hv_models::{builtin_constraints, Axis, ObservableProduct, PauliSymbol, Sign, VectorAssignment};
use crate::multi_system::system_letter;
use crate::scalar::{rat, Rational};

type Mv = Multivector<Rational>;

/// `sign · e_axis` with axis in the 1,2-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedAxis {
    pub axis: u8,
    pub sign: Sign,
}

impl SignedAxis {
    pub fn new(sign: Sign, axis: usize) -> Result<Self> {
        if !(1..=2).contains(&axis) {
            return Err(Error::OutOfPlane(format!("e{axis}")));
        }
        Ok(Self { axis: axis as u8, sign })
    }

    pub fn to_multivector(self) -> Mv {
        let e = Mv::basis_vector(self.axis as usize).expect("in-plane axis");
        if self.sign == Sign::Minus {
            -e
        } else {
            e
        }
    }
}

impl fmt::Display for SignedAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        write!(f, "{sign}e{}", self.axis)
    }
}

impl FromStr for SignedAxis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let g: SignedGenerator = s.parse()?;
        if g.system != 1 {
            return Err(Error::Parse(format!("expected a signed e-generator, got '{s}'")));
        }
        SignedAxis::new(g.sign, g.axis as usize)
    }
}

/// A signed in-plane generator of any system, e.g. `-f2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedGenerator {
    pub sign: Sign,
    pub system: u8,
    pub axis: u8,
}

impl fmt::Display for SignedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        let letter = system_letter(self.system as usize).unwrap_or('?');
        write!(f, "{sign}{letter}{}", self.axis)
    }
}

impl FromStr for SignedGenerator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (sign, rest) = match t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            Some(r) => (Sign::Minus, r),
            None => (Sign::Plus, t.strip_prefix('+').unwrap_or(t)),
        };
        let mut chars = rest.chars();
        let system = match chars.next() {
            Some('e') => 1,
            Some('f') => 2,
            Some('g') => 3,
            _ => return Err(Error::Parse(format!("bad generator '{s}'"))),
        };
        let axis: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad generator '{s}'")))?;
        match axis {
            1 | 2 => Ok(SignedGenerator { sign, system, axis: axis as u8 }),
            3 => Err(Error::OutOfPlane(rest.to_string())),
            _ => Err(Error::Parse(format!("bad generator '{s}'"))),
        }
    }
}

/// Images of `f1, f2, g1, g2` in the e-copy; e-generators map to themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityMap {
    f: [SignedAxis; 2],
    g: [SignedAxis; 2],
}

fn check_pair(letter: char, pair: &[SignedAxis; 2]) -> Result<()> {
    if pair[0].axis == pair[1].axis {
        return Err(Error::InvalidIdentityMap(format!("{letter}1 and {letter}2 both map onto axis {}", pair[0].axis)));
    }
    Ok(())
}

impl IdentityMap {
    pub fn new(f: [SignedAxis; 2], g: [SignedAxis; 2]) -> Result<Self> {
        check_pair('f', &f)?;
        check_pair('g', &g)?;
        Ok(Self { f, g })
    }

    /// `e1 = −f1 = g1`, `e2 = f2 = g2`.
    pub fn phi() -> Self {
        "{\"f1\":\"-e1\",\"f2\":\"e2\",\"g1\":\"e1\",\"g2\":\"e2\"}".parse().expect("valid map")
    }

    /// `e = f = g` axis by axis.
    pub fn identity() -> Self {
        "{\"f1\":\"e1\",\"f2\":\"e2\",\"g1\":\"e1\",\"g2\":\"e2\"}".parse().expect("valid map")
    }

    /// All 64 maps (8 signed permutations per system) in ascending order of
    /// their encoding.
    pub fn all() -> Vec<IdentityMap> {
        let mut per_system = Vec::with_capacity(8);
        for (a, b) in [(1, 2), (2, 1)] {
            for sa in [Sign::Plus, Sign::Minus] {
                for sb in [Sign::Plus, Sign::Minus] {
                    per_system
                        .push([SignedAxis::new(sa, a).expect("in-plane"), SignedAxis::new(sb, b).expect("in-plane")]);
                }
            }
        }
        let mut maps: Vec<IdentityMap> =
            per_system.iter().flat_map(|f| per_system.iter().map(move |g| IdentityMap { f: *f, g: *g })).collect();
        maps.sort();
        maps
    }

    /// Image of generator `axis` of `system`.
    pub fn image(&self, system: usize, axis: usize) -> Result<SignedAxis> {
        if axis == 3 {
            return Err(Error::OutOfPlane(format!("{}3", system_letter(system).unwrap_or('?'))));
        }
        if !(1..=2).contains(&axis) {
            return Err(Error::AxisOutOfRange(axis));
        }
        match system {
            1 => SignedAxis::new(Sign::Plus, axis),
            2 => Ok(self.f[axis - 1]),
            3 => Ok(self.g[axis - 1]),
            other => Err(Error::SystemOutOfRange { index: other, count: 3 }),
        }
    }

    pub fn image_of(&self, generator: SignedGenerator) -> Result<SignedAxis> {
        let img = self.image(generator.system as usize, generator.axis as usize)?;
        Ok(SignedAxis { axis: img.axis, sign: img.sign * generator.sign })
    }

    /// `sign(axis permutation) · (product of image signs)`: `+1` iff the
    /// system's `1·2` bivector maps to `+e1e2`. System 1 is always `+1`.
    pub fn handedness(&self, system: usize) -> Result<Sign> {
        let pair = match system {
            1 => return Ok(Sign::Plus),
            2 => &self.f,
            3 => &self.g,
            other => return Err(Error::SystemOutOfRange { index: other, count: 3 }),
        };
        let perm = Sign::from_bit(pair[0].axis > pair[1].axis);
        Ok(perm * pair[0].sign * pair[1].sign)
    }
}

#[derive(Serialize, Deserialize)]
struct IdentityMapDoc {
    f1: String,
    f2: String,
    g1: String,
    g2: String,
}

impl Serialize for IdentityMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdentityMapDoc {
            f1: self.f[0].to_string(),
            f2: self.f[1].to_string(),
            g1: self.g[0].to_string(),
            g2: self.g[1].to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IdentityMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = IdentityMapDoc::deserialize(deserializer)?;
        let p = |s: &str| s.parse::<SignedAxis>().map_err(D::Error::custom);
        IdentityMap::new([p(&doc.f1)?, p(&doc.f2)?], [p(&doc.g1)?, p(&doc.g2)?]).map_err(D::Error::custom)
    }
}

impl fmt::Display for IdentityMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

impl FromStr for IdentityMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidIdentityMap(e.to_string()))
    }
}

/// Maps each factor's value `±generator` through `map` into the e-copy and
/// multiplies the resulting vectors in written order.
pub fn substitute_and_reduce(map: &IdentityMap, line: &ObservableProduct, signs: &VectorAssignment) -> Result<Mv> {
    line.factors().iter().try_fold(Mv::one(), |acc, &factor| {
        if factor.axis() == Axis::Z {
            return Err(Error::OutOfPlane(factor.to_string()));
        }
        let image = map.image(factor.system(), factor.axis().index())?;
        let value = SignedAxis { axis: image.axis, sign: image.sign * signs.get(factor)? };
        Ok(&acc * &value.to_multivector())
    })
}

/// The four Bell-GHZ products in the order `xyy, yxy, yyx, xxx`.
pub fn bell_ghz_products() -> Vec<ObservableProduct> {
    let bg = builtin_constraints("bell_ghz").expect("builtin");
    bg.lines
        .iter()
        .map(|l| ObservableProduct::new(l.terms.iter().flat_map(|t| t.factors().iter().copied()).collect()))
        .collect::<Result<_>>()
        .expect("one factor per system")
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnResult {
    /// Values of `xyy, yxy, yyx, xxx`, each `±e1` or `±e2`.
    pub entries: [Mv; 4],
    pub product: Mv,
}

impl ColumnResult {
    pub fn rendered(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

pub fn bell_ghz_column(map: &IdentityMap) -> ColumnResult {
    let bg = builtin_constraints("bell_ghz").expect("builtin");
    let va = VectorAssignment::all_positive(&bg);
    let products = bell_ghz_products();
    let entries: [Mv; 4] =
        std::array::from_fn(|k| substitute_and_reduce(map, &products[k], &va).expect("bell-ghz lines are in-plane"));
    let product = entries.iter().fold(Mv::one(), |acc, e| &acc * e);
    ColumnResult { entries, product }
}

/// Every map whose column reads `(x, x, x, −x)`, where `x` is the image of
/// `target` under that map (e-targets are their own image).
pub fn find_identity_maps(target: SignedGenerator) -> Result<Vec<IdentityMap>> {
    let mut found = Vec::new();
    for map in IdentityMap::all() {
        let x = map.image_of(target)?.to_multivector();
        let column = bell_ghz_column(&map);
        let wanted = [x.clone(), x.clone(), x.clone(), -&x];
        if column.entries == wanted {
            found.push(map);
        }
    }
    Ok(found)
}

/// With `f := e`, returns `e_i (f_i f_j) − (f_i f_j) e_i`. The result is
/// `2 e_j`, nonzero, so identified generators cannot also commute.
pub fn check_a3_incompatibility(i: usize, j: usize) -> Result<Mv> {
    if i == j {
        return Err(Error::SameAxes(i));
    }
    let ei = Mv::basis_vector(i)?;
    let fij = &Mv::basis_vector(i)? * &Mv::basis_vector(j)?;
    Ok(&(&ei * &fij) - &(&fij * &ei))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrientationReading {
    pub system: usize,
    /// Variables in determination order, e.g. `["f2", "f1"]`.
    pub order: [String; 2],
    /// False when the line order fixes no order for this system and the
    /// ascending order was used.
    pub transferred: bool,
    pub bivector: Mv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrientationReport {
    pub readings: [OrientationReading; 3],
    /// `(a, b, identical)` for the pairs (1,2), (1,3), (2,3).
    pub verdicts: [(usize, usize, bool); 3],
}

impl OrientationReport {
    pub fn identical(&self, a: usize, b: usize) -> bool {
        self.verdicts.iter().any(|&(x, y, same)| ((x, y) == (a, b) || (x, y) == (b, a)) && same)
    }
}

/// Reads each system's orientation in the 1,2-plane. System 1 is taken to be
/// determined in the order `(σx, σy)`, i.e. orientation `e1e2`. That order is
/// carried to system `s` through the Bell-GHZ lines read top-down: the
/// system-`s` variable sharing the first line with `σ¹x` is determined first,
/// the one sharing the first line with `σ¹y` second. Each value is then
/// reduced through `map`.
pub fn orientation_reading(map: &IdentityMap) -> OrientationReport {
    let products = bell_ghz_products();
    let axis_in = |p: &ObservableProduct, system: usize| {
        p.factors().iter().find(|f| f.system() == system).map(|f| f.axis()).expect("all systems present")
    };
    let first_with = |axis: Axis| products.iter().find(|p| axis_in(p, 1) == axis).expect("line exists");

    let readings: [OrientationReading; 3] = std::array::from_fn(|k| {
        let system = k + 1;
        let a = axis_in(first_with(Axis::X), system);
        let b = axis_in(first_with(Axis::Y), system);
        let (first, second, transferred) = if a != b { (a, b, true) } else { (Axis::X, Axis::Y, false) };
        let value = |axis: Axis| map.image(system, axis.index()).expect("in-plane").to_multivector();
        let name = |axis: Axis| {
            PauliSymbol::new(system, axis)
                .map(|_| format!("{}{}", system_letter(system).expect("system 1..=3"), axis.index()))
        };
        OrientationReading {
            system,
            order: [name(first).expect("valid"), name(second).expect("valid")],
            transferred,
            bivector: &value(first) * &value(second),
        }
    });
    let same = |a: usize, b: usize| readings[a - 1].bivector == readings[b - 1].bivector;
    let verdicts = [(1, 2, same(1, 2)), (1, 3, same(1, 3)), (2, 3, same(2, 3))];
    OrientationReport { readings, verdicts }
}

/// `+e1e2`.
pub fn e12() -> Mv {
    &Mv::basis_vector(1).expect("axis") * &Mv::basis_vector(2).expect("axis")
}

/// Scalar `−1` in the single copy.
pub fn minus_one() -> Mv {
    Mv::scalar(rat(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Mv {
        Mv::basis_vector(i).unwrap()
    }

    fn gen(s: &str) -> SignedGenerator {
        s.parse().unwrap()
    }

    #[test]
    fn substitution_examples() {
        let bg = builtin_constraints("bell_ghz").unwrap();
        let va = VectorAssignment::all_positive(&bg);
        let phi = IdentityMap::phi();
        let xxx: ObservableProduct = "x1*x2*x3".parse().unwrap();
        assert_eq!(substitute_and_reduce(&phi, &xxx, &va).unwrap(), -e(1));
        let yxy: ObservableProduct = "y1*x2*y3".parse().unwrap();
        assert_eq!(substitute_and_reduce(&phi, &yxy, &va).unwrap(), e(1));
        assert_eq!(substitute_and_reduce(&IdentityMap::identity(), &yxy, &va).unwrap(), -e(1));
        let bad: ObservableProduct = "z1*x2*x3".parse().unwrap();
        assert!(matches!(substitute_and_reduce(&phi, &bad, &va), Err(Error::OutOfPlane(_))));
    }

    #[test]
    fn negative_values_flow_through() {
        let bg = builtin_constraints("bell_ghz").unwrap();
        let mut va = VectorAssignment::all_positive(&bg);
        va.set(PauliSymbol::new(2, Axis::X).unwrap(), Sign::Minus);
        let xxx: ObservableProduct = "x1*x2*x3".parse().unwrap();
        assert_eq!(substitute_and_reduce(&IdentityMap::phi(), &xxx, &va).unwrap(), e(1));
    }

    #[test]
    fn columns() {
        let col = bell_ghz_column(&IdentityMap::phi());
        assert_eq!(col.entries, [e(1), e(1), e(1), -e(1)]);
        assert_eq!(col.product, minus_one());
        let col = bell_ghz_column(&IdentityMap::identity());
        assert_eq!(col.entries, [e(1), -e(1), e(1), e(1)]);
        assert_eq!(col.product, minus_one());
        let swapped: IdentityMap = r#"{"f1":"e2","f2":"e1","g1":"e1","g2":"e2"}"#.parse().unwrap();
        let col = bell_ghz_column(&swapped);
        assert_eq!(col.entries, [e(2), e(2), e(2), -e(2)]);
        assert_eq!(col.product, minus_one());
    }

    #[test]
    fn search_examples() {
        let maps = find_identity_maps(gen("e1")).unwrap();
        assert!(maps.contains(&IdentityMap::phi()));
        assert!(!find_identity_maps(gen("-e1")).unwrap().is_empty());
        let swapped: IdentityMap = r#"{"f1":"e2","f2":"e1","g1":"e1","g2":"e2"}"#.parse().unwrap();
        assert!(find_identity_maps(gen("g2")).unwrap().contains(&swapped));
        assert!(matches!("e3".parse::<SignedGenerator>(), Err(Error::OutOfPlane(_))));
    }

    #[test]
    fn a3_witness() {
        assert_eq!(check_a3_incompatibility(1, 2).unwrap(), e(2).scale(&rat(2)));
        assert_eq!(check_a3_incompatibility(2, 3).unwrap(), e(3).scale(&rat(2)));
        assert_eq!(check_a3_incompatibility(1, 1), Err(Error::SameAxes(1)));
    }

    #[test]
    fn orientation_examples() {
        let r = orientation_reading(&IdentityMap::phi());
        assert!(r.readings.iter().all(|x| x.bivector == e12()));
        assert_eq!(r.readings[1].order, ["f2".to_string(), "f1".to_string()]);
        assert!(r.readings[1].transferred);
        assert!(!r.readings[2].transferred);
        assert!(r.identical(1, 2) && r.identical(1, 3) && r.identical(2, 3));

        let r = orientation_reading(&IdentityMap::identity());
        assert_eq!(r.readings[0].bivector, e12());
        assert_eq!(r.readings[1].bivector, -e12());
        assert_eq!(r.readings[2].bivector, e12());
        assert!(r.identical(1, 3));
        assert!(!r.identical(1, 2));
    }

    #[test]
    fn map_validation_and_json() {
        let bad = r#"{"f1":"e1","f2":"-e1","g1":"e1","g2":"e2"}"#.parse::<IdentityMap>();
        assert!(matches!(bad, Err(Error::InvalidIdentityMap(_))));
        assert!(r#"{"f1":"e3","f2":"e1","g1":"e1","g2":"e2"}"#.parse::<IdentityMap>().is_err());
        assert_eq!(IdentityMap::phi().to_string(), r#"{"f1":"-e1","f2":"e2","g1":"e1","g2":"e2"}"#);
        assert_eq!(IdentityMap::all().len(), 64);
        let mut sorted = IdentityMap::all();
        sorted.dedup();
        assert_eq!(sorted.len(), 64);
    }
}
