use thiserror::Error;

use crate::switching::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("switching plan violates the Godsil-McKay conditions ({} violations)", .0.violations.len())]
    InvalidPlan(Box<ValidationReport>),

    #[error("enumeration refused: {required} subsets needed, ceiling is {ceiling}")]
    EnumerationCeiling { required: u128, ceiling: u128 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
