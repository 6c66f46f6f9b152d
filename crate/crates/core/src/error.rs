//! Error type shared by all library modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input matrix fails the Hermiticity check.
    #[error("not Hermitian: max deviation {max_dev:.3e} exceeds {tol:.3e}")]
    NotHermitian { max_dev: f64, tol: f64 },

    /// Matrix or vector dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A north-chart coordinate was requested for the exact south pole.
    #[error("chart conversion required: the south pole has no finite north-chart coordinate")]
    ChartConversionRequired,

    /// Closed-form Heisenberg maps only exist at p = pi/2.
    #[error("closed form valid only at p=pi/2 (got p={p})")]
    RotationAngleNotQuarterTurn { p: f64 },

    /// Ensemble sampling needs at least one sample.
    #[error("ensemble must contain at least one sample")]
    EmptyEnsemble,
}

pub type Result<T> = std::result::Result<T, Error>;
