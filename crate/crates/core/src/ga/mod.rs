//! Exact arithmetic in G³ = Cl(3,0).

mod blade;
mod dynamic;
mod multivector;

pub use blade::BladeMask;
pub use dynamic::{add, geometric_product, negate, scale, DynMultivector, DynScalar};
pub use multivector::Multivector;

pub(crate) use multivector::render_terms;
