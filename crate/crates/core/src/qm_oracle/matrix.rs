use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::field::GaussianRational;
use crate::error::{Error, Result};

/// Entry type of a [`Matrix`]: a commutative ring with complex conjugation.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// `re + i·im`.
    fn gauss(re: i64, im: i64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn zero() -> Self {
        Self::gauss(0, 0)
    }

    fn one() -> Self {
        Self::gauss(1, 0)
    }
}

impl Ring for GaussianRational {
    fn gauss(re: i64, im: i64) -> Self {
        GaussianRational::from_ints(re, im)
    }

    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }

    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl Ring for Complex64 {
    fn gauss(re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

/// Dense row-major square or rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ComplexMatrix = Matrix<GaussianRational>;

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(bad.len(), c));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = T::one();
        }
        m
    }

    /// Column vector.
    pub fn column(entries: Vec<T>) -> Self {
        Self { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn scale(&self, k: &T) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| k.clone() * x.clone()).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).conj());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let a = self.get(r / other.rows, c / other.cols);
                let b = other.get(r % other.rows, c % other.cols);
                data.push(a.clone() * b.clone());
            }
        }
        Self { rows, cols, data }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                data.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    fn zip(&self, other: &Self, f: impl Fn(T, T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a.clone(), b.clone())).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.commutator(other)?.is_zero())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_unitary(&self) -> bool {
        self.adjoint().try_mul(self).map(|p| p == Self::identity(self.cols)).unwrap_or(false)
    }

    /// `Some(+1)` / `Some(−1)` when the matrix is `±identity`.
    pub fn as_signed_identity(&self) -> Option<i8> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(self.rows);
        if *self == id {
            Some(1)
        } else if *self == id.scale(&-T::one()) {
            Some(-1)
        } else {
            None
        }
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    /// Panics on a dimension mismatch; use [`Matrix::try_mul`] otherwise.
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}
