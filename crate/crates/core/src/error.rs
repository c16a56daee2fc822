//! Library error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("element does not lie in {0}")]
    NotInAlgebra(&'static str),

    #[error("operator has non-constant coefficients")]
    NonConstantCoefficient,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
