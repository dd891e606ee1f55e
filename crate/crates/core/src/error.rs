use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// The elimination condition has no sign change on `[0, 1)`; the
    /// approximation regime is exceeded for this level.
    #[error("no root of the elimination condition in [0, 1) for level n = {n}")]
    NoRootInUnitInterval { n: usize },

    #[error("bisection for level n = {n} stalled at residual {residual:e}")]
    ResidualNotMet { n: usize, residual: f64 },

    #[error("cutoff {cutoff} too small for level n = {n} (norm deficit {deficit:e})")]
    CutoffTooSmall {
        n: usize,
        cutoff: usize,
        deficit: f64,
    },

    #[error("eigensolver did not converge (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { off_diagonal: f64 },

    #[error("state is not normalized (norm² = {norm_sq})")]
    UnnormalizedState { norm_sq: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
