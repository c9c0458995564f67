use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Text input that does not match the expected grammar.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Structured (JSON) input with a bad field.
    #[error("{path}: {message}")]
    Format { path: String, message: String },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    /// A condition guaranteed for genuine representations failed mid-normalization.
    #[error("degenerate normalization at step {step}: {message}")]
    DegenerateStep { step: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn format(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(message: impl Into<String>) -> Self {
        Error::DimensionMismatch(message.into())
    }
}
