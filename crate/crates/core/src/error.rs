use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?} as a rational: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("division by zero")]
    DivisionByZero,

    #[error("non-finite float value {0}")]
    NonFinite(String),

    #[error("point list is empty")]
    EmptyPoints,

    #[error("operation needs at least {required} points, got {found}")]
    TooFewPoints { required: usize, found: usize },

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix dimension {n} exceeds the limit of {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("roots {first} and {second} coincide; expansion needs distinct roots")]
    DuplicateRoot { first: usize, second: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
