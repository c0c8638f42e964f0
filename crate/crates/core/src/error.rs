use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vectors of different lengths compared ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("span from {from} to {to} is not a non-negative integer")]
    NonIntegralSpan { from: Rational, to: Rational },

    #[error("{0:?} is not a partition into distinct odd parts")]
    InvalidPartition(Vec<u32>),

    #[error("invalid Jordan data: {0}")]
    InvalidJordan(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("cannot parse {0:?} as a rational")]
    ParseRational(String),
}
