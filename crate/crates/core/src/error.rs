use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed text input. `line` is 1-based; 0 means the input as a whole.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally invalid graph, subgraph or argument.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An enumeration or construction limit was exceeded.
    #[error("{what} is {actual}, exceeds the limit of {limit}")]
    Cap {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("numeric error: {0}")]
    Numeric(String),

    /// A constructed eigenpair failed its residual check.
    #[error("certification failed: residual {residual:e} exceeds {tolerance:e}")]
    Certification { residual: f64, tolerance: f64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
