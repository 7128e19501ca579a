use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("incomplete: {0}")]
    Incomplete(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
