use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("singular transform")]
    SingularTransform,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("enumeration of {needed} points exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("subspace dimension {0} too large for the pencil procedure (max 2)")]
    DimensionTooLarge(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("empty generator list with no ambient shape")]
    EmptyGenerators,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
