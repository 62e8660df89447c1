use std::fmt;

use thiserror::Error;

use crate::lattice_fan::ValidationReport;

/// Errors raised by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid fan: {0}")]
    InvalidFan(ValidationReport),
    #[error("operation requires a two-dimensional fan, got dimension {0}")]
    NotDim2(usize),
    #[error("weight {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("a search box is required for fans of dimension {0}")]
    BoxRequired(usize),
    #[error("Čech complex limited to dimension {limit}, fan has dimension {dim}")]
    DimensionLimit { dim: usize, limit: usize },
    #[error("cochain is not a cocycle: {0}")]
    NotACocycle(String),
    #[error("sign change at breakpoint {breakpoint} (between segments {segment} and {next}) is not a lattice point")]
    NotAdmissible {
        segment: usize,
        next: usize,
        breakpoint: String,
    },
    #[error("sign tuple has length {got}, slice needs {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("height -1 slice is nontrivial ({0}); the general fiber is not toric")]
    NontrivialTail(String),
    #[error("general fiber fan failed validation: {0}")]
    FiberInvalid(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Machine-readable error codes used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCode {
    InvalidFan,
    NotDim2,
    NotPrimitive,
    BoxRequired,
    DimensionLimit,
    NotACocycle,
    NotAdmissible,
    NontrivialTail,
    FiberInvalid,
    DimensionMismatch,
}

impl Error {
    pub fn code(&self) -> ErrorCode {
        match self {
            Error::InvalidFan(_) => ErrorCode::InvalidFan,
            Error::NotDim2(_) => ErrorCode::NotDim2,
            Error::NotPrimitive(_) => ErrorCode::NotPrimitive,
            Error::BoxRequired(_) => ErrorCode::BoxRequired,
            Error::DimensionLimit { .. } => ErrorCode::DimensionLimit,
            Error::NotACocycle(_) => ErrorCode::NotACocycle,
            Error::NotAdmissible { .. } | Error::TupleLength { .. } => ErrorCode::NotAdmissible,
            Error::NontrivialTail(_) => ErrorCode::NontrivialTail,
            Error::FiberInvalid(_) => ErrorCode::FiberInvalid,
            Error::DimensionMismatch { .. } => ErrorCode::DimensionMismatch,
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorCode::InvalidFan => "INVALID_FAN",
            ErrorCode::NotDim2 => "NOT_DIM_2",
            ErrorCode::NotPrimitive => "NOT_PRIMITIVE",
            ErrorCode::BoxRequired => "BOX_REQUIRED",
            ErrorCode::DimensionLimit => "DIMENSION_LIMIT",
            ErrorCode::NotACocycle => "NOT_A_COCYCLE",
            ErrorCode::NotAdmissible => "NOT_ADMISSIBLE",
            ErrorCode::NontrivialTail => "NONTRIVIAL_TAIL",
            ErrorCode::FiberInvalid => "FIBER_INVALID",
            ErrorCode::DimensionMismatch => "DIMENSION_MISMATCH",
        };
        f.write_str(s)
    }
}
