use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::blade::BladeMask;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of G³ = Cl(3,0), stored densely over the eight basis blades
/// (index = blade mask).
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    coeffs: [S; 8],
}

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| S::zero()) }
    }

    pub fn scalar(value: S) -> Self {
        Self::blade(BladeMask::SCALAR, value)
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn blade(mask: BladeMask, value: S) -> Self {
        let mut mv = Self::zero();
        mv.coeffs[mask.bits()] = value;
        mv
    }

    /// The unit vector `e_axis`, axis 1..=3.
    pub fn basis_vector(axis: usize) -> Result<Self> {
        Ok(Self::blade(BladeMask::vector(axis)?, S::one()))
    }

    /// Product of basis vectors in the given order, e.g. `[3, 1]` gives `e3e1`.
    pub fn basis_word(axes: &[usize]) -> Result<Self> {
        axes.iter().try_fold(Self::one(), |acc, &a| Ok(&acc * &Self::basis_vector(a)?))
    }

    /// The unit pseudoscalar `e1e2e3`.
    pub fn pseudoscalar() -> Self {
        Self::blade(BladeMask::PSEUDOSCALAR, S::one())
    }

    pub fn from_coeffs(coeffs: [S; 8]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: BladeMask) -> &S {
        &self.coeffs[mask.bits()]
    }

    pub fn scalar_part(&self) -> S {
        self.coeffs[0].clone()
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        if grade > 3 {
            return Err(Error::GradeOutOfRange(grade));
        }
        let mut out = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (i as u8).count_ones() as usize == grade {
                out.coeffs[i] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * factor.clone()) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Coefficientwise comparison; `tol` bounds the max-abs difference and is
    /// ignored for exact coefficients.
    pub fn equals(&self, other: &Self, tol: f64) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.close_to(b, tol))
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> =
            (0..8).filter(|&i| !self.coeffs[i].is_zero()).map(|i| (i as u8).count_ones() as usize).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `Some((sign, axis))` when the multivector is exactly `±e_axis`.
    pub fn as_signed_basis_vector(&self) -> Option<(i8, usize)> {
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || (i as u8).count_ones() != 1 {
                return None;
            }
            let sign = if *c == S::one() {
                1
            } else if *c == -S::one() {
                -1
            } else {
                return None;
            };
            found = Some((sign, i.trailing_zeros() as usize + 1));
        }
        found
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, mask) = BladeMask::from_bits(i as u8).product(BladeMask::from_bits(j as u8));
                let term = a.clone() * b.clone();
                let slot = &mut out.coeffs[mask.bits()];
                *slot = if sign > 0 { slot.clone() + term } else { slot.clone() - term };
            }
        }
        out
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.product(rhs)
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.product(&rhs)
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        Multivector { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()) }
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        Multivector { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()) }
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector { coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()) }
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

/// Renders `(coefficient, blade-name)` terms as a signed sum such as
/// `1 + 2·e12 − e123`. An empty term list renders as `0`.
pub(crate) fn render_terms<S: Scalar>(terms: &[(S, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, name)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('−'),
            (0, false) => {}
            (_, true) => out.push_str(" − "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if name == "1" {
            out.push_str(&mag.render());
        } else if mag == S::one() {
            out.push_str(name);
        } else {
            out.push_str(&mag.render());
            out.push('·');
            out.push_str(name);
        }
    }
    out
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(S, String)> = BladeMask::DISPLAY_ORDER
            .iter()
            .filter(|m| !self.coeffs[m.bits()].is_zero())
            .map(|m| (self.coeffs[m.bits()].clone(), m.to_string()))
            .collect();
        f.write_str(&render_terms(&terms))
    }
}

impl<S: Scalar> FromStr for Multivector<S> {
    type Err = Error;

    /// Accepts the rendering grammar: signed terms `c`, `c·eIJ`, `eIJ`
    /// separated by `+`/`-` (ASCII or `−`), with `*` accepted for `·`.
    /// Blade digits may be unsorted or repeated (`e31` is `e3e1`).
    fn from_str(text: &str) -> Result<Self> {
        let normalized: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '−' => '-',
                '·' => '*',
                other => other,
            })
            .collect();
        if normalized.is_empty() {
            return Err(Error::Parse("empty multivector".into()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in normalized.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if i != 0 {
                    if current.is_empty() {
                        return Err(Error::Parse(format!("dangling sign in '{text}'")));
                    }
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("trailing sign in '{text}'")));
        }
        terms.push((negative, current));

        let mut total = Multivector::zero();
        for (negative, term) in terms {
            let (coeff, blade) = match term.split_once('*') {
                Some((c, b)) => (S::parse(c)?, Some(b)),
                None if term.starts_with('e') => (S::one(), Some(term.as_str())),
                None => (S::parse(&term)?, None),
            };
            let unit = match blade {
                None => Multivector::one(),
                Some(b) => parse_blade(b)?,
            };
            let coeff = if negative { -coeff } else { coeff };
            total = &total + &unit.scale(&coeff);
        }
        Ok(total)
    }
}

fn parse_blade<S: Scalar>(name: &str) -> Result<Multivector<S>> {
    let digits = name.strip_prefix('e').ok_or_else(|| Error::Parse(format!("bad blade '{name}'")))?;
    if digits.is_empty() {
        return Err(Error::Parse(format!("bad blade '{name}'")));
    }
    let axes = digits
        .chars()
        .map(|d| d.to_digit(10).map(|v| v as usize).ok_or_else(|| Error::Parse(format!("bad blade '{name}'"))))
        .collect::<Result<Vec<_>>>()?;
    Multivector::basis_word(&axes).map_err(|_| Error::Parse(format!("bad blade '{name}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational, DEFAULT_TOLERANCE};

    type Mv = Multivector<Rational>;

    fn e(i: usize) -> Mv {
        Mv::basis_vector(i).unwrap()
    }

    #[test]
    fn basis_vectors() {
        assert_eq!(*e(1).coeff(BladeMask::new(1).unwrap()), rat(1));
        assert_eq!(*e(2).coeff(BladeMask::new(2).unwrap()), rat(1));
        assert_eq!(Mv::basis_vector(4), Err(Error::AxisOutOfRange(4)));
        assert_eq!(Mv::basis_vector(0), Err(Error::AxisOutOfRange(0)));
    }

    #[test]
    fn product_examples() {
        assert_eq!(&e(1) * &e(1), Mv::one());
        let e12 = &e(1) * &e(2);
        assert_eq!(e12.to_string(), "e12");
        assert_eq!(&e(2) * &e(1), -&e12);
        let i = Mv::pseudoscalar();
        assert_eq!(&i * &i, -Mv::one());
        let e21 = &e(2) * &e(1);
        assert_eq!(&e12 * &e21, Mv::one());
    }

    #[test]
    fn linear_structure() {
        assert!((&e(1) + &-e(1)).is_zero());
        let e12 = &e(1) * &e(2);
        assert_eq!(e12.scale(&rat(-1)), &e(2) * &e(1));
        let m = &Mv::one() + &(&e(3) * &e(1));
        assert_eq!(m.scalar_part(), rat(1));
        assert_eq!(m.grade_project(2).unwrap(), &e(3) * &e(1));
        assert_eq!(m.to_string(), "1 − e13");
    }

    #[test]
    fn grade_projection() {
        assert_eq!((&e(1) * &e(1)).scalar_part(), rat(1));
        assert_eq!((&e(1) * &e(2)).scalar_part(), rat(0));
        assert_eq!(Mv::one().grade_project(4), Err(Error::GradeOutOfRange(4)));
    }

    #[test]
    fn equality() {
        assert!((&e(1) * &e(2)).equals(&-(&e(2) * &e(1)), 0.0));
        assert!(!e(1).equals(&e(2), 0.0));
        let x = Multivector::<f64>::from_coeffs([0.5, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0]);
        let y = &x + &Multivector::<f64>::basis_vector(1).unwrap().scale(&1e-15);
        assert!(x.equals(&y, DEFAULT_TOLERANCE));
        assert!(!x.equals(&y, 0.0));
    }

    #[test]
    fn render_and_parse() {
        let m: Mv = "1 + 2·e12 − e123".parse().unwrap();
        assert_eq!(m.to_string(), "1 + 2·e12 − e123");
        let n: Mv = "-e31 + 3/2*e2".parse().unwrap();
        assert_eq!(n.to_string(), "3/2·e2 + e13");
        assert_eq!(Mv::zero().to_string(), "0");
        assert_eq!("0".parse::<Mv>().unwrap(), Mv::zero());
        assert_eq!("e11".parse::<Mv>().unwrap(), Mv::one());
        assert!("e4".parse::<Mv>().is_err());
        assert!("1 +".parse::<Mv>().is_err());
        assert!("".parse::<Mv>().is_err());
        let f: Multivector<f64> = "0.5 - 0.25*e13".parse().unwrap();
        assert_eq!(f.to_string(), "0.5 − 0.25·e13");
    }

    #[test]
    fn signed_basis_detection() {
        assert_eq!((-e(2)).as_signed_basis_vector(), Some((-1, 2)));
        assert_eq!((&e(1) * &e(2)).as_signed_basis_vector(), None);
        assert_eq!(e(1).scale(&rat(2)).as_signed_basis_vector(), None);
    }
}
