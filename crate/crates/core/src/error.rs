use thiserror::Error;

use crate::exactalg::AlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("invalid parameter matrix: {0}")]
    InvalidMatrix(String),
    #[error("cannot parse shift expression '{0}'")]
    ShiftParse(String),
    #[error("shifts must be pairwise distinct")]
    DuplicateShifts,
    #[error("series application: {0}")]
    Series(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numerical domain error: {0}")]
    Domain(String),
    #[error("group closure exceeded {0} elements; canonical forms are not canonical")]
    ClosureOverflow(usize),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
