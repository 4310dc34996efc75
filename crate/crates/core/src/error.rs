use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Numerical routines that can produce a *best-effort* answer (the adaptive
/// integrators) do not error on slow convergence; they return their estimate
/// with a `converged = false` flag instead. Hard errors are reserved for
/// domain violations and iteration failures where no useful value exists.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Model parameters violate their invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Root bracket does not straddle a sign change.
    #[error("invalid bracket: no sign change on [{lo}, {hi}]")]
    BracketInvalid { lo: f64, hi: f64 },

    /// An iterative solver hit its iteration cap.
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
