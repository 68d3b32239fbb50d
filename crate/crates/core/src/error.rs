use alloc::string::String;

/// Errors raised by the core engine.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid truncation n_max = {n_max} (need at least {min})")]
    InvalidTruncation { n_max: u32, min: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid sector: {0}")]
    InvalidSector(String),

    #[error("operation not supported in dimension {0}")]
    UnsupportedDimension(u8),

    #[error("operand shapes differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not symmetric (max defect {0:e})")]
    NotSymmetric(f64),

    #[error("Jacobi sweeps did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("resolvent radical is not real (imaginary part {0:e})")]
    DegenerateRadical(f64),

    #[error("closed form not applicable: {0}")]
    CaseMismatch(&'static str),

    #[error("closed form gave a negative radicand ({0:e})")]
    FormulaViolation(f64),

    #[error("state has weight outside every diagonalized sector")]
    UndiagonalizedSector,

    #[error("time grid must be non-empty, finite and non-decreasing")]
    InvalidGrid,
}

pub type Result<T> = core::result::Result<T, Error>;
