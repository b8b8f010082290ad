use thiserror::Error;

use crate::classify::ConditionViolation;

/// Errors raised by the library.
///
/// Variants fall into three classes (see [`Error::class`]): malformed input,
/// mathematical rejection of an otherwise well-formed input, and internal
/// inconsistencies that indicate a construction bug.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mismatched cyclotomic fields: ell = {0} vs ell = {1}")]
    MismatchedField(u32, u32),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("empty shape: n must be at least 1")]
    EmptyShape,
    #[error("component {component} is not a skew shape: {detail}")]
    NotSkew { component: usize, detail: String },
    #[error("component {component} is not connected")]
    NotConnected { component: usize },
    #[error("degenerate shape: {0}")]
    DegenerateShape(String),
    #[error("filling is not standard: {0}")]
    NotStandard(String),
    #[error("not an l-partition: {0}")]
    NotAPartition(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} does not act by a scalar")]
    NotScalar(String),
    #[error("operator is not diagonal in the given basis: {0}")]
    NotDiagonal(String),
    #[error("weight condition fails: {0}")]
    ConditionFailed(ConditionViolation),
    #[error("no addable position for label {step}")]
    NoAddablePosition { step: usize },
}

/// Coarse outcome class of an [`Error`], used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Malformed,
    Rejected,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Malformed(_)
            | Error::EmptyShape
            | Error::MismatchedField(..)
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch(_)
            | Error::NotAPartition(_) => ErrorClass::Malformed,
            Error::NotSkew { .. }
            | Error::NotConnected { .. }
            | Error::DegenerateShape(_)
            | Error::NotStandard(_)
            | Error::ConditionFailed(_)
            | Error::NoAddablePosition { .. } => ErrorClass::Rejected,
            Error::DivisionByZero | Error::NotScalar(_) | Error::NotDiagonal(_) => {
                ErrorClass::Internal
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
