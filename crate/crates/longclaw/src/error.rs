//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed instance text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An argument referenced a vertex outside the host graph or otherwise
    /// violated an operation precondition.
    #[error("input error: {0}")]
    Input(String),

    /// A structural self-check failed. This always signals a bug in the
    /// caller or in this crate, never a property of the instance.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// An exact routine was asked to run past its configured budget.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A structural bound that must hold for every rigid decomposition
    /// failed to hold.
    #[error("bound violation: {0}")]
    BoundViolation(String),

    /// The input was promised to avoid s disjoint copies of the pattern but
    /// does not.
    #[error("input is not {s}S_{{{t},{t},{t}}}-free: {msg}")]
    SIllegalInput { s: usize, t: usize, msg: String },

    /// Parameter outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn cap(msg: impl Into<String>) -> Self {
        Error::CapExceeded(msg.into())
    }
}
