use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (max |m - m^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not complex symmetric (max |m - m^T| = {deviation:e})")]
    NotSymmetric { deviation: f64 },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("trace is {trace} instead of 1")]
    TraceNotUnit { trace: f64 },
    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("value {value} lies outside [0, 1]")]
    OutOfRange { value: f64 },
    #[error("rank {rank} is not in 1..={max}")]
    BadRank { rank: usize, max: usize },
    #[error("invalid qudit dimension {d} (need d >= 2)")]
    BadDimension { d: usize },
    #[error("invalid channel indices ({i}, {j}) for d = {d}; need 1 <= i < j <= d")]
    BadIndices { d: usize, i: usize, j: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires a two-qubit state, got qudit dimension {d}")]
    WrongDimension { d: usize },
    #[error("input {index} is negative ({value})")]
    NegativeInput { index: usize, value: f64 },
    #[error("right matrix rows are not orthonormal on the support (deviation {deviation:e})")]
    BadRightMatrix { deviation: f64 },
    #[error("invalid size {n}: need an even n >= 4")]
    BadSize { n: usize },
    #[error("invalid shape {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("lambda1 exceeds lambda2 + lambda3 + lambda4 by {excess:e}; no closing angles exist")]
    NotInRegime { excess: f64 },
    #[error("{what} did not converge")]
    NoConvergence { what: &'static str },
    #[error("Takagi factorization failed (residual {residual:e})")]
    TakagiFailure { residual: f64 },
    #[error("{what}: the two formulas disagree by {difference:e}")]
    Inconsistent { what: &'static str, difference: f64 },
}
