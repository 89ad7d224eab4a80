use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("composition failed: {0}")]
    Composition(String),

    #[error("provider timed out for {key}")]
    ProviderTimeout { key: String },

    #[error("search inconclusive for {spec}: {reason}")]
    Inconclusive { spec: String, reason: String },

    #[error("catalog entry {key} failed integrity check: {reason}")]
    Integrity { key: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
