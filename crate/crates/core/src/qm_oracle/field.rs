use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{rat, Rational};

/// `a + b√2` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_i64(v: i64) -> Self {
        Self { a: rat(v), b: Rational::zero() }
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self { a: Rational::zero(), b: Rational::new(1.into(), 2.into()) }
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: QSqrt2) -> QSqrt2 {
        let two = rat(2);
        QSqrt2 { a: &self.a * &rhs.a + two * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => f.write_str("√2"),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {sign} {}√2", self.a, self.b.abs())
            }
        }
    }
}

/// Complex number `re + i·im` over `Q(√2)`. With both √2-parts zero this is
/// an ordinary Gaussian rational, which is all the Pauli algebra needs; the
/// √2 extension carries the `1/√2` state amplitudes exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: QSqrt2,
    pub im: QSqrt2,
}

impl GaussianRational {
    pub fn new(re: QSqrt2, im: QSqrt2) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self { re: QSqrt2::from_i64(re), im: QSqrt2::from_i64(im) }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`, always real.
    pub fn norm_sqr(&self) -> QSqrt2 {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_arithmetic() {
        let s = QSqrt2::inv_sqrt2();
        assert_eq!(s.clone() * s.clone(), QSqrt2::new(Rational::new(1.into(), 2.into()), Rational::zero()));
        assert!((s.to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(QSqrt2::new(rat(1), rat(-3)).to_string(), "1 - 3√2");
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = GaussianRational::from_ints(0, 1);
        assert_eq!(i.clone() * i.clone(), GaussianRational::from_ints(-1, 0));
        let z = GaussianRational::from_ints(3, 4);
        assert_eq!(z.norm_sqr(), QSqrt2::from_i64(25));
        assert_eq!(z.clone() * z.conj(), GaussianRational::from_ints(25, 0));
    }
}
