use thiserror::Error;

use crate::exactint::Overflow;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("expected a tuple with {expected} parts, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("parts {parts:?} share the common divisor {gcd}; the generalized Frobenius number is unbounded")]
    NotCoprime { parts: Vec<i64>, gcd: i64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Overflow(#[from] Overflow),

    #[error("table capacity exceeded: need {requested} entries, capacity is {capacity}")]
    CapacityExceeded { requested: u64, capacity: usize },

    #[error("no closed form applies: {0}")]
    NoApplicableCase(String),

    #[error("search cancelled")]
    Cancelled,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the CLI for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) | Error::CapacityExceeded { .. } => 3,
            Error::Inconsistent(_) | Error::Io(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
