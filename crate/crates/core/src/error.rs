//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
