use thiserror::Error;

/// Errors raised by the algebra kernel and its front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("exponent {exponent} of x{index} is negative; only x1 may be inverted")]
    NegativeExponent { index: usize, exponent: i64 },
    #[error("exponent {exponent} of d{index} is negative")]
    NegativePartialExponent { index: usize, exponent: i64 },
    #[error("cannot substitute q = 0")]
    EvalAtZero,
    #[error("coactions are defined on forms of degree at most 1, got degree {0}")]
    DegreeTooHigh(usize),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
