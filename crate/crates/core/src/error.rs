use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants are grouped so that a caller (the CLI in particular) can map
/// them onto distinct exit statuses: bad input, a negative mathematical
/// verdict, an exhausted resource budget, or an internal consistency failure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("empty plane: the linear system is inconsistent")]
    EmptyPlane,

    #[error("degenerate parallelogram: {0}")]
    Degenerate(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a symmetry of the continued fraction")]
    NotSymmetry,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("resource limit exceeded: {0}")]
    ResourceCap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
