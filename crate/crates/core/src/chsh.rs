//! The CHSH quantity for scalar values and for vector values on a coplanar
//! configuration.
//!
//! With scalar ±1 values, `γ = ab + ab′ + a′b − a′b′` is always ±2. With unit
//! vectors in the e1,e3-plane and the geometric product, `γ` becomes an even
//! multivector `1 + 2cosφ − cos2φ + (2sinφ − sin2φ)·e3e1`, and the absolute
//! value of its scalar part gives the curve `F(φ)`, which peaks at `5/2` at
//! `φ = π/3`.

use std::f64::consts::PI;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::Multivector;
use crate::qm_oracle::singlet_correlation;
use crate::scalar::DEFAULT_TOLERANCE;

type Mv = Multivector<f64>;

pub const CLASSICAL_BOUND: f64 = 2.0;
pub const QM_BOUND: f64 = 2.5;

fn in_plane(cos: f64, sin: f64) -> Mv {
    Mv::from_coeffs([0.0, cos, 0.0, 0.0, sin, 0.0, 0.0, 0.0])
}

fn check_angle(phi: f64) -> Result<()> {
    if !(-DEFAULT_TOLERANCE..=PI + DEFAULT_TOLERANCE).contains(&phi) {
        return Err(Error::InvalidRange(format!("phi = {phi} outside [0, π]")));
    }
    Ok(())
}

/// `a = b = e1 cosφ + e3 sinφ`, `a′ = e1 cos2φ + e3 sin2φ`, `b′ = e1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoplanarConfig {
    pub phi: f64,
    pub a: Mv,
    pub a_prime: Mv,
    pub b: Mv,
    pub b_prime: Mv,
}

impl CoplanarConfig {
    pub fn new(phi: f64) -> Result<Self> {
        check_angle(phi)?;
        let a = in_plane(phi.cos(), phi.sin());
        Ok(Self {
            phi,
            b: a.clone(),
            a,
            a_prime: in_plane((2.0 * phi).cos(), (2.0 * phi).sin()),
            b_prime: in_plane(1.0, 0.0),
        })
    }

    pub fn vectors(&self) -> [&Mv; 4] {
        [&self.a, &self.a_prime, &self.b, &self.b_prime]
    }
}

/// Components `(x, y, z)` of a grade-1 multivector.
pub fn to_3vector(v: &Mv) -> [f64; 3] {
    let c = v.coeffs();
    [c[1], c[2], c[4]]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalGamma {
    pub a: i8,
    pub a_prime: i8,
    pub b: i8,
    pub b_prime: i8,
    pub gamma: i8,
}

/// All 16 assignments of ±1 to `(a, a′, b, b′)`; bit 3..0 of the index
/// negates `a, a′, b, b′` respectively.
pub fn classical_gamma_enumeration() -> Vec<ClassicalGamma> {
    (0..16u8)
        .map(|bits| {
            let v = |k: u8| if bits >> k & 1 == 1 { -1i8 } else { 1 };
            let (a, a_prime, b, b_prime) = (v(3), v(2), v(1), v(0));
            ClassicalGamma { a, a_prime, b, b_prime, gamma: a * b + a * b_prime + a_prime * b - a_prime * b_prime }
        })
        .collect()
}

/// `ab + ab′ + a′b − a′b′` with geometric products.
pub fn gamma_vector(cfg: &CoplanarConfig) -> Mv {
    &(&(&(&cfg.a * &cfg.b) + &(&cfg.a * &cfg.b_prime)) + &(&cfg.a_prime * &cfg.b)) - &(&cfg.a_prime * &cfg.b_prime)
}

/// `1 + 2cosφ − cos2φ + (2sinφ − sin2φ)·e3e1`.
pub fn gamma_closed_form(phi: f64) -> Mv {
    let e3e1 = &Mv::basis_vector(3).expect("axis") * &Mv::basis_vector(1).expect("axis");
    let scalar = 1.0 + 2.0 * phi.cos() - (2.0 * phi).cos();
    let bivector = 2.0 * phi.sin() - (2.0 * phi).sin();
    &Mv::scalar(scalar) + &e3e1.scale(&bivector)
}

/// `|scalar part of γ|`.
pub fn f_value(phi: f64) -> Result<f64> {
    Ok(gamma_vector(&CoplanarConfig::new(phi)?).scalar_part().abs())
}

/// `|1 + 2cosφ − cos2φ|`.
pub fn f_closed_form(phi: f64) -> f64 {
    (1.0 + 2.0 * phi.cos() - (2.0 * phi).cos()).abs()
}

/// `|c(a,b) + c(a,b′) + c(a′,b) − c(a′,b′)|` with singlet correlations.
pub fn chsh_quantum_lhs(phi: f64) -> Result<f64> {
    let cfg = CoplanarConfig::new(phi)?;
    let c = |x: &Mv, y: &Mv| singlet_correlation(to_3vector(x), to_3vector(y));
    Ok((c(&cfg.a, &cfg.b)? + c(&cfg.a, &cfg.b_prime)? + c(&cfg.a_prime, &cfg.b)? - c(&cfg.a_prime, &cfg.b_prime)?)
        .abs())
}

/// `b + b′` and `b − b′`. The scalar argument bounding `|γ|` by 2 needs one
/// of them to vanish, which never happens for `0 < φ < π`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonCollinearityWitness {
    pub sum: Mv,
    pub difference: Mv,
}

impl NonCollinearityWitness {
    pub fn both_nonzero(&self) -> bool {
        !self.sum.equals(&Mv::zero(), DEFAULT_TOLERANCE) && !self.difference.equals(&Mv::zero(), DEFAULT_TOLERANCE)
    }
}

pub fn non_collinearity_witness(cfg: &CoplanarConfig) -> NonCollinearityWitness {
    NonCollinearityWitness { sum: &cfg.b + &cfg.b_prime, difference: &cfg.b - &cfg.b_prime }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanResult {
    pub argmax: f64,
    pub max: f64,
    pub steps: usize,
}

impl ScanResult {
    pub fn summary(&self) -> String {
        format!("max={:.6} at phi={:.6}", self.max, self.argmax)
    }
}

fn validate_range(start: f64, end: f64, steps: usize) -> Result<()> {
    if !(start.is_finite() && end.is_finite()) || start < 0.0 || start >= end || end > PI {
        return Err(Error::InvalidRange(format!("need 0 <= start < end <= π, got [{start}, {end}]")));
    }
    if steps < 3 {
        return Err(Error::InvalidRange(format!("need at least 3 steps, got {steps}")));
    }
    Ok(())
}

/// The `steps` equally spaced angles from `start` to `end` inclusive.
pub fn grid(start: f64, end: f64, steps: usize) -> Result<Vec<f64>> {
    validate_range(start, end, steps)?;
    let h = (end - start) / (steps - 1) as f64;
    Ok((0..steps).map(|k| if k == steps - 1 { end } else { start + k as f64 * h }).collect())
}

/// Maximum of `F` over the inclusive grid; ties keep the smallest angle.
pub fn scan_range(start: f64, end: f64, steps: usize) -> Result<ScanResult> {
    let mut best = ScanResult { argmax: start, max: f64::NEG_INFINITY, steps };
    for phi in grid(start, end, steps)? {
        let f = f_value(phi)?;
        if f > best.max {
            best.max = f;
            best.argmax = phi;
        }
    }
    Ok(best)
}

/// [`scan_range`] over `[0, π]`.
pub fn scan_f(steps: usize) -> Result<ScanResult> {
    scan_range(0.0, PI, steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CsvRow {
    pub phi: f64,
    pub f: f64,
    pub qm_lhs: f64,
    pub classical_bound: f64,
    pub qm_bound: f64,
}

pub const CSV_HEADER: &str = "phi,F,qm_lhs,classical_bound,qm_bound";

pub fn csv_rows(start: f64, end: f64, steps: usize) -> Result<Vec<CsvRow>> {
    grid(start, end, steps)?
        .into_iter()
        .map(|phi| {
            Ok(CsvRow {
                phi,
                f: f_value(phi)?,
                qm_lhs: chsh_quantum_lhs(phi)?,
                classical_bound: CLASSICAL_BOUND,
                qm_bound: QM_BOUND,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[CsvRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{:.12},{:.12},{:.12},{},{}", r.phi, r.f, r.qm_lhs, r.classical_bound, r.qm_bound)?;
    }
    Ok(())
}
