//! Error types shared across the crate.

use thiserror::Error;

/// Errors from parsing partition / composition literals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid token `{0}` in partition literal")]
    InvalidToken(String),
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("zero or negative part embedded in partition")]
    NonPositivePart,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// The query's partition sizes are incompatible (|lambda| vs |mu|+|nu|, etc).
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// The query exceeds the configured desk-scale budget for every available path.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A path-specific precondition does not hold (caller should use another path).
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("variable count mismatch: {0}")]
    VariableCountMismatch(String),
    /// Plethysm substitution needs the inner function to have nonnegative coefficients.
    #[error("negative coefficient: {0}")]
    NegativeCoefficient(String),
    #[error("inner shape is not contained in outer shape")]
    InnerNotContained,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
