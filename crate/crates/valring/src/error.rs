use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid element index {index} for ring of order {order}")]
    InvalidElement { index: u64, order: u64 },

    #[error("element {index} is not invertible")]
    NotInvertible { index: u64 },

    #[error("vector has no unit coordinate")]
    DegenerateVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands belong to different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("{what} size {size} exceeds cap {cap}")]
    Capacity { what: &'static str, size: u64, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("eigensolver failed to converge after {iterations} iterations")]
    Numerical { iterations: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
