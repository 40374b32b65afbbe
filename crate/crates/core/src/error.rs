use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a weight of the lattice")]
    NotLattice(String),

    #[error("{0} is not dominant")]
    NotDominant(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A size bound was exceeded; the message names the bound.
    #[error("guard exceeded: {what} ({actual} > {limit})")]
    Guard {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    /// Two routes that must agree did not. Always an engine bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Process exit status for this error: 2 usage, 3 guard, 4 inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Guard { .. } => 3,
            Error::Inconsistency(_) => 4,
            _ => 2,
        }
    }

    pub(crate) fn guard(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Guard {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }
}
