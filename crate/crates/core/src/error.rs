use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside the domain of an operation (index out of range,
    /// leaf-count mismatch, unsupported size, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A tree string that does not follow the bracket grammar.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A structural invariant of a tree failed.
    #[error("invalid tree: {0}")]
    Invalid(String),

    /// Collapsing zero-length edges would unite vertices into an illegal
    /// painted vertex (mixed painted and unpainted incoming edges).
    #[error("painted merge violation: {0}")]
    PaintedMerge(String),

    /// An internal consistency check failed. Indicates a bug, not bad input.
    #[error("inconsistent: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
