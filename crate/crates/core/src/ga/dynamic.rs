//! Multivectors whose coefficient mode is chosen at runtime (CLI `--mode`,
//! the C API). Mixing modes is reported as [`Error::MixedMode`].

use std::fmt;

use super::Multivector;
use crate::error::{Error, Result};
use crate::scalar::{Mode, Rational, Scalar};

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq)]
pub enum DynMultivector {
    Exact(Multivector<Rational>),
    Approx(Multivector<f64>),
}

/// Coefficient matching a [`DynMultivector`]'s mode.
#[derive(Debug, Clone, PartialEq)]
pub enum DynScalar {
    Exact(Rational),
    Approx(f64),
}

impl DynScalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            DynScalar::Exact(r) => r.to_f64(),
            DynScalar::Approx(x) => *x,
        }
    }
}

impl fmt::Display for DynScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynScalar::Exact(r) => f.write_str(&r.render()),
            DynScalar::Approx(x) => f.write_str(&x.render()),
        }
    }
}

impl DynMultivector {
    pub fn mode(&self) -> Mode {
        match self {
            DynMultivector::Exact(_) => Mode::Exact,
            DynMultivector::Approx(_) => Mode::Approx,
        }
    }

    pub fn basis_vector(axis: usize, mode: Mode) -> Result<Self> {
        Ok(match mode {
            Mode::Exact => DynMultivector::Exact(Multivector::basis_vector(axis)?),
            Mode::Approx => DynMultivector::Approx(Multivector::basis_vector(axis)?),
        })
    }

    pub fn parse(text: &str, mode: Mode) -> Result<Self> {
        Ok(match mode {
            Mode::Exact => DynMultivector::Exact(text.parse()?),
            Mode::Approx => DynMultivector::Approx(text.parse()?),
        })
    }

    pub fn scalar_part(&self) -> DynScalar {
        match self {
            DynMultivector::Exact(m) => DynScalar::Exact(m.scalar_part()),
            DynMultivector::Approx(m) => DynScalar::Approx(m.scalar_part()),
        }
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        Ok(match self {
            DynMultivector::Exact(m) => DynMultivector::Exact(m.grade_project(grade)?),
            DynMultivector::Approx(m) => DynMultivector::Approx(m.grade_project(grade)?),
        })
    }

    pub fn equals(&self, other: &Self, tol: f64) -> Result<bool> {
        match (self, other) {
            (DynMultivector::Exact(a), DynMultivector::Exact(b)) => Ok(a.equals(b, tol)),
            (DynMultivector::Approx(a), DynMultivector::Approx(b)) => Ok(a.equals(b, tol)),
            _ => Err(mixed(self, other)),
        }
    }
}

impl fmt::Display for DynMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynMultivector::Exact(m) => m.fmt(f),
            DynMultivector::Approx(m) => m.fmt(f),
        }
    }
}

fn mixed(a: &DynMultivector, b: &DynMultivector) -> Error {
    Error::MixedMode(a.mode().as_str(), b.mode().as_str())
}

pub fn geometric_product(a: &DynMultivector, b: &DynMultivector) -> Result<DynMultivector> {
    match (a, b) {
        (DynMultivector::Exact(x), DynMultivector::Exact(y)) => Ok(DynMultivector::Exact(x * y)),
        (DynMultivector::Approx(x), DynMultivector::Approx(y)) => Ok(DynMultivector::Approx(x * y)),
        _ => Err(mixed(a, b)),
    }
}

pub fn add(a: &DynMultivector, b: &DynMultivector) -> Result<DynMultivector> {
    match (a, b) {
        (DynMultivector::Exact(x), DynMultivector::Exact(y)) => Ok(DynMultivector::Exact(x + y)),
        (DynMultivector::Approx(x), DynMultivector::Approx(y)) => Ok(DynMultivector::Approx(x + y)),
        _ => Err(mixed(a, b)),
    }
}

pub fn negate(a: &DynMultivector) -> DynMultivector {
    match a {
        DynMultivector::Exact(x) => DynMultivector::Exact(-x),
        DynMultivector::Approx(x) => DynMultivector::Approx(-x),
    }
}

pub fn scale(a: &DynMultivector, c: &DynScalar) -> Result<DynMultivector> {
    match (a, c) {
        (DynMultivector::Exact(x), DynScalar::Exact(k)) => Ok(DynMultivector::Exact(x.scale(k))),
        (DynMultivector::Approx(x), DynScalar::Approx(k)) => Ok(DynMultivector::Approx(x.scale(k))),
        (_, DynScalar::Exact(_)) => Err(Error::MixedMode(a.mode().as_str(), "exact")),
        (_, DynScalar::Approx(_)) => Err(Error::MixedMode(a.mode().as_str(), "approx")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn mixed_mode_is_rejected() {
        let a = DynMultivector::basis_vector(1, Mode::Exact).unwrap();
        let b = DynMultivector::basis_vector(1, Mode::Approx).unwrap();
        assert_eq!(geometric_product(&a, &b), Err(Error::MixedMode("exact", "approx")));
        assert!(add(&a, &b).is_err());
        assert!(a.equals(&b, 1e-12).is_err());
        assert!(scale(&a, &DynScalar::Approx(2.0)).is_err());
    }

    #[test]
    fn same_mode_ops() {
        let e1 = DynMultivector::basis_vector(1, Mode::Exact).unwrap();
        let e2 = DynMultivector::basis_vector(2, Mode::Exact).unwrap();
        let e12 = geometric_product(&e1, &e2).unwrap();
        let e21 = geometric_product(&e2, &e1).unwrap();
        assert!(e12.equals(&negate(&e21), 0.0).unwrap());
        assert_eq!(scale(&e12, &DynScalar::Exact(rat(-1))).unwrap(), e21);
        assert_eq!(geometric_product(&e1, &e1).unwrap().scalar_part(), DynScalar::Exact(rat(1)));
        let sum = add(&e1, &negate(&e1)).unwrap();
        assert_eq!(sum.to_string(), "0");
        let parsed = DynMultivector::parse("1 + e13", Mode::Approx).unwrap();
        assert_eq!(parsed.grade_project(2).unwrap().to_string(), "e13");
    }
}
