//! Exact computer algebra for geometric-algebra hidden-variable models of the
//! Peres-Mermin square, the GHZ system and Mermin's Bell-GHZ argument.
//!
//! - [`ga`]: multivectors of Cl(3,0) with exact or floating coefficients.
//! - [`multi_system`]: N commuting copies of Cl(3,0) (bases e, f, g).
//! - [`hv_models`]: constraint systems, exhaustive ±1 search and the
//!   vector-valued model.
//! - [`identity_model`]: identifications of f/g generators with e generators.
//! - [`qm_oracle`]: exact Pauli-matrix quantum mechanics used as a cross-check.
//! - [`chsh`]: the coplanar CHSH sweep.
//! - [`verify`]: JSON verification reports driving the CLI.

pub mod chsh;
pub mod error;
pub mod ga;
pub mod hv_models;
pub mod identity_model;
pub mod multi_system;
pub mod qm_oracle;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Mode, Rational, Scalar};
