//! Exact spin-½ quantum mechanics used as an independent oracle.
//!
//! Pauli matrices use the standard forms with `σxσy = iσz`, and `|+⟩, |−⟩`
//! are the `σz` eigenstates with eigenvalues `+1, −1`. Tensor slots are
//! ordered by ascending system index, so basis index bit `N−s` encodes
//! system `s` (`0` for `+`, `1` for `−`).

mod field;
mod matrix;

pub use field::{GaussianRational, QSqrt2};
pub use matrix::{ComplexMatrix, Matrix, Ring};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{BladeMask, Multivector};
use crate::hv_models::{builtin_constraints, Axis, ObservableProduct, Sign};
use crate::multi_system::MAX_SYSTEMS;
use crate::scalar::{Rational, DEFAULT_TOLERANCE};

pub fn pauli<T: Ring>(axis: Axis) -> Matrix<T> {
    let g = T::gauss;
    let rows = match axis {
        Axis::X => vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]],
        Axis::Y => vec![vec![g(0, 0), g(0, -1)], vec![g(0, 1), g(0, 0)]],
        Axis::Z => vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]],
    };
    Matrix::from_rows(rows).expect("2x2")
}

/// `⊗_s` of the factor on each system, identity where the product has none.
pub fn observable_matrix<T: Ring>(p: &ObservableProduct, systems: usize) -> Result<Matrix<T>> {
    if p.max_system() > systems {
        return Err(Error::SystemOutOfRange { index: p.max_system(), count: systems });
    }
    let mut m = Matrix::identity(1);
    for s in 1..=systems {
        let slot = match p.factors().iter().find(|f| f.system() == s) {
            Some(f) => pauli(f.axis()),
            None => Matrix::identity(2),
        };
        m = m.kron(&slot);
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OperatorLineCheck {
    pub label: String,
    pub required: Sign,
    /// `Some(±1)` when the line's operator word is `±identity`.
    pub result: Option<i8>,
    pub members_commute: bool,
}

impl OperatorLineCheck {
    pub fn passed(&self) -> bool {
        self.result == Some(self.required.value()) && self.members_commute
    }
}

/// Multiplies each line's observables as matrices and compares the word with
/// `±identity`; also checks that the line's members commute pairwise.
pub fn verify_operator_identities(cs_name: &str) -> Result<Vec<OperatorLineCheck>> {
    let cs = builtin_constraints(cs_name)?;
    if cs.name == "bell_ghz" {
        return Err(Error::Unsupported(cs.name));
    }
    let n = cs.system_count();
    cs.lines
        .iter()
        .map(|line| {
            let ops =
                line.terms.iter().map(|t| observable_matrix::<GaussianRational>(t, n)).collect::<Result<Vec<_>>>()?;
            let word = ops.iter().fold(Matrix::identity(1 << n), |acc, m| &acc * m);
            let mut members_commute = true;
            for (i, a) in ops.iter().enumerate() {
                for b in &ops[i + 1..] {
                    members_commute &= a.commutes_with(b)?;
                }
            }
            Ok(OperatorLineCheck {
                label: line.label.clone(),
                required: line.required,
                result: word.as_signed_identity(),
                members_commute,
            })
        })
        .collect()
}

/// `σiσj + σjσi = 2δij·1` for all nine ordered pairs.
pub fn check_pauli_anticommutation() -> Vec<(Axis, Axis, bool)> {
    let mut out = Vec::with_capacity(9);
    for &i in &Axis::ALL {
        for &j in &Axis::ALL {
            let lhs = pauli::<GaussianRational>(i).anticommutator(&pauli(j)).expect("2x2");
            let rhs = if i == j {
                Matrix::identity(2).scale(&GaussianRational::from_ints(2, 0))
            } else {
                Matrix::zeros(2, 2)
            };
            out.push((i, j, lhs == rhs));
        }
    }
    out
}

/// Checks `σ^a_i σ^b_j = σ^b_j σ^a_i` for every ordered pair of distinct
/// systems and every axis pair. Returns `(pairs checked, all commute)`.
pub fn check_cross_system_commutation(systems: usize) -> Result<(usize, bool)> {
    if !(1..=MAX_SYSTEMS).contains(&systems) {
        return Err(Error::SystemCount(systems));
    }
    let mut checked = 0;
    let mut ok = true;
    for a in 1..=systems {
        for b in (1..=systems).filter(|&b| b != a) {
            for &i in &Axis::ALL {
                for &j in &Axis::ALL {
                    let p = ObservableProduct::new(vec![crate::hv_models::PauliSymbol::new(a, i)?])?;
                    let q = ObservableProduct::new(vec![crate::hv_models::PauliSymbol::new(b, j)?])?;
                    let pm = observable_matrix::<GaussianRational>(&p, systems)?;
                    let qm = observable_matrix::<GaussianRational>(&q, systems)?;
                    ok &= pm.commutes_with(&qm)?;
                    checked += 1;
                }
            }
        }
    }
    Ok((checked, ok))
}

fn rational_entry(c: &Rational) -> GaussianRational {
    GaussianRational::new(QSqrt2::new(c.clone(), Rational::from_integer(0.into())), QSqrt2::zero())
}

/// The representation `e_i ↦ σ_i` extended to blades as ordered products.
pub fn ga_matrix(mv: &Multivector<Rational>) -> ComplexMatrix {
    let mut out = Matrix::zeros(2, 2);
    for bits in 0..8u8 {
        let c = mv.coeff(BladeMask::new(bits as usize).expect("mask"));
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let blade =
            (0..3).filter(|k| bits >> k & 1 == 1).fold(Matrix::identity(2), |acc, k| &acc * &pauli(Axis::ALL[k]));
        out = out.try_add(&blade.scale(&rational_entry(c))).expect("2x2");
    }
    out
}

/// Result of comparing Cl(3,0) with the algebra generated by the Pauli
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismCheck {
    /// Blade pairs `(A, B)` with `M(AB) = M(A)M(B)`, out of 64.
    pub multiplicative_pairs: usize,
    /// The eight blade images are orthogonal under `Re tr(X†Y)`, hence
    /// linearly independent over the reals.
    pub images_independent: bool,
}

impl IsomorphismCheck {
    pub fn passed(&self) -> bool {
        self.multiplicative_pairs == 64 && self.images_independent
    }
}

pub fn check_ga_isomorphism() -> IsomorphismCheck {
    let blades: Vec<Multivector<Rational>> =
        (0..8).map(|b| Multivector::blade(BladeMask::new(b).expect("mask"), crate::scalar::rat(1))).collect();
    let images: Vec<ComplexMatrix> = blades.iter().map(ga_matrix).collect();
    let mut multiplicative_pairs = 0;
    for (a, ma) in blades.iter().zip(&images) {
        for (b, mb) in blades.iter().zip(&images) {
            if ga_matrix(&(a * b)) == ma * mb {
                multiplicative_pairs += 1;
            }
        }
    }
    let mut images_independent = true;
    for (i, x) in images.iter().enumerate() {
        for (j, y) in images.iter().enumerate() {
            let p = &x.adjoint() * y;
            let trace = (0..2).fold(GaussianRational::from_ints(0, 0), |acc, k| acc + p.get(k, k).clone());
            let expected = QSqrt2::from_i64(if i == j { 2 } else { 0 });
            images_independent &= trace.re == expected;
        }
    }
    IsomorphismCheck { multiplicative_pairs, images_independent }
}

/// A pure state of `systems` spin-½ particles with exact amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    systems: usize,
    amplitudes: Vec<GaussianRational>,
}

impl StateVector {
    pub fn new(systems: usize, amplitudes: Vec<GaussianRational>) -> Result<Self> {
        if !(1..=MAX_SYSTEMS).contains(&systems) {
            return Err(Error::SystemCount(systems));
        }
        if amplitudes.len() != 1 << systems {
            return Err(Error::DimensionMismatch(amplitudes.len(), 1 << systems));
        }
        Ok(Self { systems, amplitudes })
    }

    /// `Σ c_k |ket_k⟩` with kets written as strings of `+`/`−`, e.g. `"+-+"`.
    pub fn from_kets(terms: &[(&str, GaussianRational)]) -> Result<Self> {
        let systems = terms.first().map_or(0, |(k, _)| k.chars().count());
        let mut amplitudes = vec![GaussianRational::from_ints(0, 0); 1 << systems.min(MAX_SYSTEMS)];
        for (ket, c) in terms {
            let mut index = 0usize;
            let mut len = 0;
            for ch in ket.chars() {
                index = index << 1
                    | match ch {
                        '+' => 0,
                        '-' | '−' => 1,
                        _ => return Err(Error::Parse(format!("bad ket '{ket}'"))),
                    };
                len += 1;
            }
            if len != systems {
                return Err(Error::DimensionMismatch(len, systems));
            }
            amplitudes[index] = amplitudes[index].clone() + c.clone();
        }
        Self::new(systems, amplitudes)
    }

    /// `(|+++⟩ − |−−−⟩)/√2`.
    pub fn phi() -> Self {
        let h = GaussianRational::new(QSqrt2::inv_sqrt2(), QSqrt2::zero());
        Self::from_kets(&[("+++", h.clone()), ("---", -h)]).expect("valid kets")
    }

    /// `(|+−+⟩ + |−+−⟩)/√2`.
    pub fn phi_prime() -> Self {
        let h = GaussianRational::new(QSqrt2::inv_sqrt2(), QSqrt2::zero());
        Self::from_kets(&[("+-+", h.clone()), ("-+-", h)]).expect("valid kets")
    }

    pub fn systems(&self) -> usize {
        self.systems
    }

    pub fn amplitudes(&self) -> &[GaussianRational] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> QSqrt2 {
        self.amplitudes.iter().fold(QSqrt2::zero(), |acc, a| acc + a.norm_sqr())
    }

    fn as_column(&self) -> ComplexMatrix {
        Matrix::column(self.amplitudes.clone())
    }
}

/// Exact test of `M(p)·state = eigenvalue·state`.
pub fn eigencheck(state: &StateVector, p: &ObservableProduct, eigenvalue: Sign) -> Result<bool> {
    Ok(eigenvalue_of(state, p)? == Some(eigenvalue))
}

/// The eigenvalue of `p` on `state`, or `None` if `state` is not an
/// eigenvector.
pub fn eigenvalue_of(state: &StateVector, p: &ObservableProduct) -> Result<Option<Sign>> {
    if p.max_system() > state.systems {
        return Err(Error::DimensionMismatch(1 << p.max_system(), state.amplitudes.len()));
    }
    let v = state.as_column();
    let image = observable_matrix::<GaussianRational>(p, state.systems)?.try_mul(&v)?;
    Ok(if image == v {
        Some(Sign::Plus)
    } else if image == v.scale(&GaussianRational::from_ints(-1, 0)) {
        Some(Sign::Minus)
    } else {
        None
    })
}

fn spin_along(v: [f64; 3]) -> Matrix<Complex64> {
    Axis::ALL.iter().zip(v).fold(Matrix::zeros(2, 2), |acc, (&axis, c)| {
        acc.try_add(&pauli::<Complex64>(axis).scale(&Complex64::new(c, 0.0))).expect("2x2")
    })
}

fn check_unit(v: [f64; 3]) -> Result<()> {
    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > DEFAULT_TOLERANCE {
        return Err(Error::NonUnitVector(format!("{norm}")));
    }
    Ok(())
}

/// `⟨ψ⁻|(σ·a)⊗(σ·b)|ψ⁻⟩` for the singlet `ψ⁻ = (|+−⟩ − |−+⟩)/√2`.
pub fn singlet_correlation(a: [f64; 3], b: [f64; 3]) -> Result<f64> {
    check_unit(a)?;
    check_unit(b)?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = Complex64::new(0.0, 0.0);
    let psi = Matrix::column(vec![zero, Complex64::new(h, 0.0), Complex64::new(-h, 0.0), zero]);
    let op = spin_along(a).kron(&spin_along(b));
    let value = &(&psi.adjoint() * &op) * &psi;
    Ok(value.get(0, 0).re)
}
