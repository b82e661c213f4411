use alloc::string::String;

/// Errors raised by the exact arithmetic and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {lhs_rows}x{lhs_cols} against {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape is invalid: {0}")]
    InvalidShape(String),
    #[error("expected a rank-one matrix, found rank {rank}")]
    NotRankOne { rank: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("element reference {0} is out of range")]
    InvalidReference(usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
