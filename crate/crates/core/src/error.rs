use thiserror::Error;

/// Errors produced by geometry, operators and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite")]
    NonFinite { name: &'static str },

    #[error("invalid feasible set: {0}")]
    InvalidSet(String),

    #[error("feasible set is unbounded")]
    UnboundedSet,

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("point is infeasible: {0}")]
    Infeasible(String),

    #[error(
        "line search exhausted {trials} trials at iteration {iter} (last L = {last_l:e}); \
         the strong-monotonicity modulus or the operator is likely inconsistent"
    )]
    LineSearchExhausted {
        iter: usize,
        trials: usize,
        last_l: f64,
    },

    #[error("empty grid")]
    EmptyGrid,

    #[error("solver invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
