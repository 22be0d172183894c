use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    /// The odd part of the extracted generators does not reproduce `D`.
    #[error("{value} lies in exactly one of D and H1{generators:?}")]
    HypothesisUnsatisfied { generators: Vec<u64>, value: u64 },

    #[error("resource ceiling exceeded: {0}")]
    ResourceCeiling(String),

    #[error("count overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
