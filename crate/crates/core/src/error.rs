use thiserror::Error;

use crate::basis::BasisState;

/// Errors produced anywhere in the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("initial support is empty")]
    EmptyInitial,

    #[error("invalid basis state {state}: {reason}")]
    InvalidState { state: BasisState, reason: String },

    #[error("closure produced {state} with occupation above the cap of {cap}")]
    OccupationCap { state: BasisState, cap: u8 },

    #[error("state {0} is not part of the state space")]
    StateOutsideSpace(BasisState),

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal {off_diagonal:e})"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("norm drift {drift:e} at step {step} exceeds the abort threshold")]
    NormDrift { step: usize, drift: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("density matrix has eigenvalue {0:e} below the admissible floor")]
    NegativeEigenvalue(f64),

    #[error("unknown series {0:?}")]
    UnknownSeries(String),

    #[error("horizon too short: found {found} quiet zone(s), need at least 2")]
    HorizonTooShort { found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
