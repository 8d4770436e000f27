use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation (index out of range,
    /// length mismatch, empty sequence, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A grid or mode configuration that the requested curve does not support.
    #[error("configuration error: {0}")]
    Config(String),

    /// Two inputs that must differ were equal.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A constructed map failed its own invariant checks. Always a codec bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

pub(crate) fn parse(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}
