use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} is not a vertex of the component")]
    NotAVertex(String),

    /// Raised when a symbol-based reconstruction does not invert the
    /// quotient map. Indicates a convention bug.
    #[error("construction inconsistency: {0}")]
    ConstructionInconsistency(String),

    #[error("invalid graph document at {location}: {reason}")]
    Document { location: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}
