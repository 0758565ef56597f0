use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rectangulation: {0}")]
    InvalidDrawing(String),
    #[error("invalid inversion sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("object is outside the domain: {0}")]
    OutOfDomain(String),
    #[error("size {n} exceeds the supported limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("trace cannot be replayed: {0}")]
    BadTrace(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
