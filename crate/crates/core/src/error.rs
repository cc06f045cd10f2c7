use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input is a perfect square")]
    PerfectSquareInput,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("quadratic irrationals over Q(sqrt {0}) and Q(sqrt {1}) cannot be combined")]
    FieldMismatch(u64, u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("point is not in the open cone")]
    NotInCone,
    #[error("translates of the cone miss the point within {0} steps")]
    NotFundamental(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
