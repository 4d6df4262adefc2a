//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid relation set: {0}")]
    Relation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("zero denominator in the coefficient of a basis target {0}")]
    ZeroDenominator(String),
    #[error("module is not finite-dimensional: {0}")]
    Infinite(String),
    #[error("no admissible maximal relation set: {0}")]
    NoMaximalSet(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Error {
        Error::Parse(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}
