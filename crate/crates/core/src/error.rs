use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid local dimension {0}: must be at least 2")]
    InvalidDimension(usize),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry in input")]
    NonFinite,

    #[error("hermiticity invariant violated: max |M - M^dagger| entry = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("trace invariant violated: trace = {trace}, expected {expected}")]
    TraceMismatch { trace: f64, expected: f64 },

    #[error("positivity invariant violated: minimum eigenvalue = {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("normalization invariant violated: norm = {norm}")]
    NotNormalized { norm: f64 },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("not constructible: {0}")]
    NotConstructible(&'static str),
}
