//! Reusable 1-D numerical kernels: adaptive Gauss–Kronrod quadrature on
//! finite and semi-infinite intervals, bracketed root finding and
//! derivative-free maximization.
//!
//! All routines are pure functions of their inputs and deterministic:
//! identical inputs produce bit-identical outputs.

mod optimize;
mod quadrature;
mod root;

pub use optimize::maximize_1d;
pub use quadrature::{integrate_finite, integrate_semi_infinite};
pub use root::find_root_monotone;

/// Variable change mapping `[0, ∞)` onto `[0, 1)` for semi-infinite
/// integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Transform {
    /// No mapping (only meaningful for finite integrals).
    None,
    /// `x = t / (1 - t)`; robust default, suited to algebraic decay.
    #[default]
    RationalMap,
    /// `x = -ln(1 - t)`; suited to exponentially decaying integrands.
    ExpMap,
}

/// Tolerances and subdivision limits for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Relative tolerance on the integral value. Must be positive.
    pub rel_tol: f64,
    /// Absolute tolerance; the effective target is
    /// `max(abs_tol, rel_tol * |value|)`.
    pub abs_tol: f64,
    /// Maximum number of subintervals kept by the adaptive bisection.
    pub max_subdivisions: usize,
    /// Mapping used by [`integrate_semi_infinite`].
    pub transform: Transform,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 400,
            transform: Transform::RationalMap,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> crate::Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol >= 0.0) {
            return Err(crate::Error::InvalidParams(format!(
                "quadrature tolerances rel={} abs={} (need rel > 0, abs >= 0)",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(crate::Error::InvalidParams(
                "max_subdivisions must be >= 1".into(),
            ));
        }
        Ok(())
    }

    /// Copy of `self` with a different transform.
    pub fn with_transform(mut self, transform: Transform) -> Self {
        self.transform = transform;
        self
    }

    /// Copy of `self` with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    /// Copy of `self` with a different absolute tolerance.
    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }
}

/// Outcome of an adaptive integration.
///
/// Slow convergence is not an error: the best available estimate is
/// returned with `converged = false` and callers decide what to do with it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralEstimate {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: usize,
    /// True when `error_estimate <= max(abs_tol, rel_tol * |value|)`.
    pub converged: bool,
}
