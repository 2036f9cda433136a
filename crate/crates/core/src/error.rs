//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource bound exceeded: {0}")]
    Bound(String),
    #[error("not a valid character: {0}")]
    Character(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
