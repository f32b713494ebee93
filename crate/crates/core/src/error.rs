use thiserror::Error;

/// Failures raised by exact evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator: offset {offset} cancels index {index}")]
    ZeroDenominator { offset: String, index: u64 },

    #[error("zero raised to negative power {0}")]
    ZeroToNegativePower(i64),

    #[error("division by a dual number with zero value part")]
    NonInvertibleDual,

    #[error("division by zero")]
    DivisionByZero,

    /// A closed form has a vanishing factor at these parameters.
    #[error("pole parameter: {0} vanishes")]
    PoleParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
