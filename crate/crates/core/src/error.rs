use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller violated an operation's contract (wrong ring, bad argument).
    #[error("usage error: {0}")]
    Usage(String),
    /// A mathematical precondition failed (e.g. no Bernstein polynomial).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An internal consistency check failed.
    #[error("internal invariant breached: {0}")]
    Invariant(String),
    #[error("computation cancelled")]
    Cancelled,
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Error {
        Error::Usage(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Error {
        Error::Invariant(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
