use thiserror::Error;

/// Errors raised by the matrix kernels, spectral functions and bound evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    Empty { rows: usize, cols: usize },

    #[error("expected {expected} entries for the declared shape, got {actual}")]
    EntryCount { expected: usize, actual: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds tolerance {tolerance:e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e} below {threshold:e}")]
    NotPsd { eigenvalue: f64, threshold: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    ToleranceNotPositive(f64),

    #[error("entry ({row}, {col}) is negative: {value}")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("entry ({row}, {col}) has a nonzero imaginary part: {imag}")]
    NonReal { row: usize, col: usize, imag: f64 },

    #[error("exponent {0} is outside [0, 1]")]
    ExponentOutOfRange(f64),

    #[error("function pair {label} violates its hypothesis at lambda = {lambda}: {reason}")]
    InvalidFunctionPair {
        label: String,
        lambda: f64,
        reason: &'static str,
    },

    #[error("bound {0} requires a parameter t")]
    MissingParameter(String),

    #[error("unknown bound identifier {0:?}")]
    UnknownBound(String),

    #[error("bound {0} does not apply to this input")]
    NotApplicable(String),

    #[error("invalid block layout: {0}")]
    BlockLayout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
