//! Shared error type.

use thiserror::Error;

/// Errors surfaced by the exact and numeric computation paths.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter fell outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Division by a series or rational without an inverse.
    #[error("non-invertible denominator: {0}")]
    NonInvertible(String),

    /// Inputs to a trace recursion were missing or inconsistent.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A matrix failed a structural precondition (Hermitian, idempotent, ...).
    #[error("matrix precondition failed: {0}")]
    MatrixPrecondition(String),

    /// A numeric routine failed to converge or produced garbage.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
