use thiserror::Error;

/// Failure classes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs violate an operation's precondition (size mismatch, letter out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured resource guard would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An exact computation produced a value that the mathematics forbids.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
