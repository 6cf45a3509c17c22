use thiserror::Error;

use crate::diagram::Generator;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator {0:?}")]
    InvalidGenerator(Generator),

    #[error("arity mismatch: left side ends at {0} points, right side starts at {1}")]
    ArityMismatch(usize, usize),

    #[error("{0:?} is not an endomorphism")]
    NotEndomorphism(Generator),

    #[error("cannot compose diagrams with periods {0} and {1}")]
    PeriodMismatch(usize, usize),

    #[error("closed loop with winding {0}")]
    WindingViolation(i64),

    #[error("malformed affine diagram: {0}")]
    MalformedDiagram(String),

    #[error("signatures differ: {0:?} vs {1:?}")]
    SignatureMismatch((usize, usize), (usize, usize)),

    #[error("invalid index set {starts:?} on {n} points")]
    InvalidIndex { n: usize, starts: Vec<usize> },

    #[error("index set {starts:?} on {n} points admits no cap system")]
    InconsistentIndex { n: usize, starts: Vec<usize> },

    #[error("relation instance out of range: {0}")]
    OutOfRange(String),

    #[error("vector space dimension must be at least 1, got {0}")]
    DimTooSmall(usize),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("type error in cyclic word: {0}")]
    CyclicType(String),
}
