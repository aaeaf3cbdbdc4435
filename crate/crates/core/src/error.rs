use thiserror::Error;

/// Errors raised by pencil construction, the solvers and the drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is empty")]
    Empty,

    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds {limit:.3e}")]
    NotHermitian { asymmetry: f64, limit: f64 },

    #[error("C is not indefinite: spectrum [{min:.6e}, {max:.6e}] does not straddle zero")]
    NotIndefinite { min: f64, max: f64 },

    #[error("matrix is not positive definite (smallest eigenvalue {min:.6e})")]
    NotPositiveDefinite { min: f64 },

    #[error("matrix is not stable: eigenvalue real part {max_real:.6e} is not below -{margin:.1e}")]
    NotStable { max_real: f64, margin: f64 },

    #[error("expected a 2x2 pair, found n = {0}")]
    WrongDimension(usize),

    #[error("parameter must be finite, got {0}")]
    NonFiniteParameter(f64),

    #[error("zero vector")]
    ZeroVector,

    #[error("dense eigensolver did not converge")]
    EigSolverFailure,

    #[error("grid is empty")]
    EmptyGrid,

    #[error("grid must be finite and strictly increasing")]
    InvalidGrid,

    #[error("no eigenvalue of A - {mu}C within {tol:.3e} of {lambda}")]
    NoEigenvalueNearby { mu: f64, lambda: f64, tol: f64 },

    #[error("projected matrix C_k is definite; no isotropic vector exists")]
    DefiniteProjection,

    #[error("extremum not bracketed on [{lo}, {hi}]")]
    BracketFailure { lo: f64, hi: f64 },

    #[error("candidate at mu = {mu} failed certification (residual {residual:.3e})")]
    CertificationFailed { mu: f64, residual: f64 },

    #[error("invalid option: {0}")]
    InvalidOption(String),
}

pub type Result<T> = std::result::Result<T, Error>;
