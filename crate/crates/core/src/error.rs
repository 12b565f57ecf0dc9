use thiserror::Error;

/// Errors produced by the enumeration, verification and oracle routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("mismatched shapes: {0}")]
    Mismatch(String),

    #[error("empty face: {0}")]
    EmptyFace(&'static str),

    #[error("{what} budget exceeded: needs {needed}, limit {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("outside operation domain: {0}")]
    Domain(String),

    /// A structural invariant that a theorem guarantees did not hold.
    #[error("internal consistency violated: {0}")]
    Internal(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
