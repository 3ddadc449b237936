use serde::Serialize;

use super::constraints::ConstraintSet;
use super::observable::Sign;
use crate::error::{Error, Result};

/// Largest observable count searched exhaustively (2^20 candidates).
pub const MAX_EXHAUSTIVE_OBSERVABLES: usize = 20;

/// Formal product of every line: the left sides multiply to `+1` identically
/// iff each observable occurs an even number of times overall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityWitness {
    /// `Some(+1)` when every observable occurs an even number of times.
    pub lhs_product: Option<Sign>,
    pub rhs_product: Sign,
    /// `(observable, total occurrences across lines)`.
    pub occurrences: Vec<(String, usize)>,
}

impl ParityWitness {
    /// True when the formal product alone proves the system unsatisfiable.
    pub fn is_contradiction(&self) -> bool {
        self.lhs_product == Some(Sign::Plus) && self.rhs_product == Sign::Minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalarSearch {
    pub observables: usize,
    pub candidates: u64,
    pub satisfying_count: u64,
    /// First satisfying assignment in enumeration order, one value per
    /// observable of the set.
    pub first_solution: Option<Vec<Sign>>,
    pub parity: ParityWitness,
}

pub fn parity_witness(cs: &ConstraintSet) -> ParityWitness {
    let occurrences: Vec<(String, usize)> = cs
        .observables
        .iter()
        .map(|o| (o.to_string(), cs.lines.iter().flat_map(|l| &l.terms).filter(|t| *t == o).count()))
        .collect();
    let all_even = occurrences.iter().all(|(_, n)| n % 2 == 0);
    ParityWitness {
        lhs_product: all_even.then_some(Sign::Plus),
        rhs_product: cs.lines.iter().fold(Sign::Plus, |acc, l| acc * l.required),
        occurrences,
    }
}

/// Tries every ±1 map over the set's observables. Bit `k` of the candidate
/// index set means observable `k` takes the value −1.
pub fn enumerate_scalar_assignments(cs: &ConstraintSet) -> Result<ScalarSearch> {
    let n = cs.observables.len();
    if n > MAX_EXHAUSTIVE_OBSERVABLES {
        return Err(Error::TooManyObservables(n, MAX_EXHAUSTIVE_OBSERVABLES));
    }
    // Each line as a bitmask over observables, counted with multiplicity mod 2.
    let line_masks: Vec<(u64, bool)> = cs
        .lines
        .iter()
        .map(|line| {
            let mask = line
                .terms
                .iter()
                .fold(0u64, |m, t| m ^ (1u64 << cs.observable_index(t).expect("term is an observable of the set")));
            (mask, line.required == Sign::Minus)
        })
        .collect();

    let candidates = 1u64 << n;
    let mut satisfying_count = 0;
    let mut first_solution = None;
    for candidate in 0..candidates {
        let ok = line_masks.iter().all(|&(mask, negative)| ((candidate & mask).count_ones() % 2 == 1) == negative);
        if ok {
            satisfying_count += 1;
            if first_solution.is_none() {
                first_solution = Some((0..n).map(|k| Sign::from_bit(candidate >> k & 1 == 1)).collect());
            }
        }
    }
    Ok(ScalarSearch { observables: n, candidates, satisfying_count, first_solution, parity: parity_witness(cs) })
}
