use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factor {0}: input must be at least 2")]
    FactorBelowTwo(BigUint),

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigUint),

    #[error("{base} is not invertible modulo {modulus}")]
    NotCoprime { base: BigUint, modulus: BigUint },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `column` is 1-based and counts characters of the expression text.
    #[error("expression error at column {column}: {message}")]
    Expression { column: usize, message: String },

    #[error("dataset error at line {line}, column {column}: {message}")]
    Dataset {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid tower: {0}")]
    InvalidTower(String),
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}
