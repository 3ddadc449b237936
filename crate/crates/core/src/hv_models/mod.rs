//! Constraint systems for the Peres-Mermin square, the GHZ system and the
//! Bell-GHZ relations, with two evaluators: exhaustive ±1 assignment search
//! and the vector-valued model in the commuting N-system algebra.

mod constraints;
mod observable;
mod scalar_search;
mod vector_model;

pub use constraints::{builtin_constraints, ConstraintLine, ConstraintSet, BUILTIN_NAMES};
pub use observable::{Axis, ObservableProduct, PauliSymbol, Sign};
pub use scalar_search::{
    enumerate_scalar_assignments, parity_witness, ParityWitness, ScalarSearch, MAX_EXHAUSTIVE_OBSERVABLES,
};
pub use vector_model::{
    evaluate_vector_model, non_contextuality_audit, AuditEntry, LineValue, NonContextualityAudit, Occurrence,
    VectorAssignment,
};
