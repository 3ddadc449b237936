use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axis index {0} out of range (expected 1..=3)")]
    AxisOutOfRange(usize),
    #[error("grade {0} out of range (expected 0..=3)")]
    GradeOutOfRange(usize),
    #[error("blade mask {0} out of range (expected 0..=7)")]
    BladeOutOfRange(usize),
    #[error("mixed coefficient modes: {0} and {1}")]
    MixedMode(&'static str, &'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("system index {index} out of range for a {count}-system algebra")]
    SystemOutOfRange { index: usize, count: usize },
    #[error("system count must be 1..=3, got {0}")]
    SystemCount(usize),
    #[error("system count mismatch: {0} vs {1}")]
    SystemCountMismatch(usize, usize),
    #[error("observable repeats system {0}")]
    RepeatedSystem(usize),
    #[error("unknown constraint set '{0}'")]
    UnknownConstraintSet(String),
    #[error("{0} observables exceed the exhaustive search bound of {1}")]
    TooManyObservables(usize, usize),
    #[error("no value assigned to {0}")]
    Unassigned(String),
    #[error("operation not supported for constraint set '{0}'")]
    Unsupported(String),
    #[error("invalid identity map: {0}")]
    InvalidIdentityMap(String),
    #[error("{0} lies outside the 1,2-plane")]
    OutOfPlane(String),
    #[error("axes must be distinct, got {0} and {0}")]
    SameAxes(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("vector is not unit length (norm {0})")]
    NonUnitVector(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("unknown verification target '{0}'")]
    UnknownTarget(String),
}
