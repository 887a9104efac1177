use thiserror::Error;

use crate::complex::Face;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex label {label} outside 1..={n}")]
    VertexOutOfRange { label: u64, n: usize },
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("faces must have equal cardinality (got {left} and {right})")]
    CardinalityMismatch { left: usize, right: usize },
    #[error("operation requires a nonempty face")]
    EmptyFace,
    #[error("interval step must be positive")]
    NonPositiveStep,
    #[error("prefix length {j} exceeds face size {size}")]
    PrefixTooLong { j: usize, size: usize },
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(Face),
    #[error("vertex supports overlap where disjointness is required")]
    OverlappingSupports,
    #[error("operation requires a shifted complex")]
    NotShifted,
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
    #[error("complex is not a near cone with respect to vertex {0}")]
    NotNearCone(u32),
    #[error("{0} is not prime or not below 2^62")]
    InvalidPrime(u64),
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("explicit matrix is singular")]
    SingularMatrix,
    #[error("coefficient for vertex {0} must be nonzero")]
    ZeroCoefficient(u32),
    #[error("shift validation failed after {retries} retries")]
    ValidationFailed { retries: usize },
    #[error("simplex dimension {d} exceeds the dimension of an operand")]
    SimplexTooLarge { d: isize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
