use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A transform or family was applied outside the range where it is valid.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The request lies outside the region covered by the known constructions.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A constructed path did not realize the list it claims to realize.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
