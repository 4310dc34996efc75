//! Polaritonic contribution to the Casimir energy: the zero-point sum of
//! the two coupled TE branches relative to twice the single layer, written
//! as a single μ-space integral,
//!
//!   E_pol(λ)/E_N = ∫₀^∞ [Ω₊(μ,λ) + Ω₋(μ,λ) − 2Ω₀(μ)] μ dμ,
//!
//! with E_N = ħc k_Δ³ A / 4π. Negative at short separations, positive with
//! a λ^(−5/2) tail at large ones; the maximum in between is where the
//! polaritonic force changes sign.
//!
//! The light-cone continuation of the antisymmetric branch carries zero
//! measure in μ and does not enter the integral.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::lifshitz::{EnergyReference, EnergyResult};
use crate::numerics::{
    integrate_semi_infinite, maximize_1d, IntegralEstimate, QuadratureConfig, Transform,
};
use crate::params::ModelParams;
use crate::polariton::{omega_coupled, omega_single};
use crate::specfun::{psi_inv, Sign};

/// Absolute floor for the energy quadratures: the integral passes through
/// an exact zero at the force-reversal separation, where a purely relative
/// stopping rule could never be met.
const ABS_FLOOR: f64 = 1e-18;

/// Integrand [Ω₊ + Ω₋ − 2Ω₀]·μ of the polaritonic energy at one μ.
pub fn epol_integrand(mu: f64, lambda: f64, params: &ModelParams) -> Result<f64> {
    if mu == 0.0 {
        return Ok(0.0);
    }
    let plus = omega_coupled(mu, lambda, Sign::Plus, params)?;
    let minus = omega_coupled(mu, lambda, Sign::Minus, params)?;
    let single = omega_single(mu, params)?;
    Ok(mu * (plus.omega + minus.omega - 2.0 * single.omega))
}

/// Polaritonic energy ratio E_pol(λ)/E_N.
///
/// The integral is taken in a λ-dependent variable chosen to keep its
/// support O(1): x = μ/α for λ < 10⁻² (support set by the coupling),
/// x = μλ for λ > 10² (support set by the mode overlap), plain μ in
/// between. `cfg.rel_tol` and `cfg.max_subdivisions` are honored; the
/// absolute tolerance is floored at 10⁻¹⁸ near the sign change.
pub fn epol(lambda: f64, params: &ModelParams, cfg: &QuadratureConfig) -> Result<EnergyResult> {
    params.validate()?;
    cfg.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }

    let quad_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol,
        abs_tol: cfg.abs_tol.min(ABS_FLOOR),
        max_subdivisions: cfg.max_subdivisions,
        transform: Transform::ExpMap,
    };

    let first_error: Cell<Option<Error>> = Cell::new(None);
    let mut eval = |mu: f64| -> f64 {
        match epol_integrand(mu, lambda, params) {
            Ok(v) => v,
            Err(e) => {
                if first_error.take().is_none() {
                    first_error.set(Some(e));
                }
                f64::NAN
            }
        }
    };

    let alpha = params.alpha;
    let est = if lambda < 1e-2 {
        // μ = 2αu: the tail decays as e^(-u), matching the unit rate of
        // the exponential map.
        integrate_semi_infinite(|u| 2.0 * alpha * eval(2.0 * alpha * u), &quad_cfg)
    } else if lambda > 1e2 {
        integrate_semi_infinite(|x| eval(x / lambda) / lambda, &quad_cfg)
    } else {
        integrate_semi_infinite(&mut eval, &quad_cfg)
    };
    if let Some(e) = first_error.take() {
        return Err(e);
    }

    Ok(EnergyResult {
        value: est.value,
        reference: EnergyReference::PolaritonNorm,
        error_estimate: est.error_estimate,
        lambda,
        params: *params,
        converged: est.converged,
        model_reliable: params.model_reliable(lambda),
    })
}

/// λ → 0 constant of the polaritonic energy,
///
///   E_pol/E_N → α² ∫₀^∞ dx x [ √(((αv)²x² + 1)/(1−v²))
///                            + √(((αv)²x² + ψ⁻¹(x/2)²)/(1−v²))
///                            − 2√(((αv)²x² + ψ⁻¹(x)²)/(1−v²)) ],
///
/// obtained by substituting x = μ/α and letting the coupling factors
/// degenerate (f₊ → ∞, f₋ → 1/2). Scales as α² and depends only weakly
/// on v.
pub fn epol_short_limit(params: &ModelParams, cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    params.validate()?;
    cfg.validate()?;
    let quad_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol,
        abs_tol: cfg.abs_tol.min(ABS_FLOOR),
        max_subdivisions: cfg.max_subdivisions,
        transform: Transform::ExpMap,
    };
    let a = params.alpha;
    let av2 = (a * params.v) * (a * params.v);
    let one_m_v2 = 1.0 - params.v * params.v;

    let first_error: Cell<Option<Error>> = Cell::new(None);
    // Integrated in u = x/2: the bracket dies off as e^(-x/2).
    let integrand_x = |x: f64| {
            let p_half = match psi_inv(0.5 * x) {
                Ok(p) => p,
                Err(e) => {
                    first_error.set(Some(e));
                    return f64::NAN;
                }
            };
            let p_full = match psi_inv(x) {
                Ok(p) => p,
                Err(e) => {
                    first_error.set(Some(e));
                    return f64::NAN;
                }
            };
            let base = av2 * x * x;
            let t1 = ((base + 1.0) / one_m_v2).sqrt();
            let t2 = ((base + p_half * p_half) / one_m_v2).sqrt();
            let t3 = ((base + p_full * p_full) / one_m_v2).sqrt();
            x * (t1 + t2 - 2.0 * t3)
    };
    let mut est = integrate_semi_infinite(|u| 2.0 * integrand_x(2.0 * u), &quad_cfg);
    if let Some(e) = first_error.take() {
        return Err(e);
    }
    est.value *= a * a;
    est.error_estimate *= a * a;
    Ok(est)
}

/// The numerical constant of the long-distance tail,
///
///   C = ∫₀^∞ dx x^(3/2) [ √((1 + tanh(x/2))/2) + √((1 + coth(x/2))/2) − 2 ].
///
/// The two square roots are √f₋ and √f₊ of the coupling factors; each is
/// evaluated as 1 + (f − 1)/(√f + 1) so the bracket keeps absolute
/// accuracy ~e⁻ˣ·ε when the terms cancel at large x. The coth term gives
/// an integrable x^(−1/2) behavior at the origin, handled by the open
/// quadrature rule.
pub fn compute_c(cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    cfg.validate()?;
    let quad_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol,
        abs_tol: cfg.abs_tol.min(ABS_FLOOR),
        max_subdivisions: cfg.max_subdivisions,
        transform: Transform::ExpMap,
    };
    Ok(integrate_semi_infinite(
        |x| {
            // (1 + coth(x/2))/2 = f₊(x), (1 + tanh(x/2))/2 = f₋(x).
            let fp_m1 = 1.0 / x.exp_m1(); // f₊ - 1
            let fm_m1 = -1.0 / (x.exp() + 1.0); // f₋ - 1
            let sqrt_fp = (1.0 + fp_m1).sqrt();
            let sqrt_fm = (1.0 + fm_m1).sqrt();
            let bracket = fp_m1 / (sqrt_fp + 1.0) + fm_m1 / (sqrt_fm + 1.0);
            x.powf(1.5) * bracket
        },
        &quad_cfg,
    ))
}

/// Long-distance asymptote E_pol/E_N ≈ √(3/(4α(1−v²))) · C / λ^(5/2),
/// positive (the polaritonic force is repulsive out here).
pub fn epol_long_asymptote(lambda: f64, params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }
    let c = compute_c(&QuadratureConfig::default())?.value;
    Ok((3.0 / (4.0 * params.alpha * (1.0 - params.v * params.v))).sqrt() * c
        / lambda.powf(2.5))
}

/// Location and height of the maximum of E_pol(λ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossover {
    /// Separation of the maximum, where the polaritonic force reverses
    /// from attractive to repulsive.
    pub lambda_max: f64,
    /// E_pol(λ_max)/E_N, positive.
    pub epol_max: f64,
}

/// Find the maximum of E_pol(λ) by golden-section search in ln λ over a
/// bracket auto-detected from the sign structure: E_pol is negative at
/// small λ and decays through a positive tail, so doubling λ until the
/// value turns positive and then starts decreasing brackets the maximum.
pub fn find_crossover(params: &ModelParams, cfg: &QuadratureConfig) -> Result<Crossover> {
    params.validate()?;
    cfg.validate()?;

    let first_error: Cell<Option<Error>> = Cell::new(None);
    let value_at = |lambda: f64| -> f64 {
        match epol(lambda, params, cfg) {
            Ok(e) => e.value,
            Err(e) => {
                first_error.set(Some(e));
                f64::NEG_INFINITY
            }
        }
    };

    // Doubling scan for the bracket.
    const MAX_DOUBLINGS: usize = 60;
    let mut lambda = 1.0;
    let mut value = value_at(lambda);
    let mut lo = lambda;
    let mut hi = None;
    for _ in 0..MAX_DOUBLINGS {
        let next = 2.0 * lambda;
        let next_value = value_at(next);
        if next_value < value && value > 0.0 {
            hi = Some(next);
            break;
        }
        if value <= 0.0 {
            lo = lambda;
        }
        lambda = next;
        value = next_value;
    }
    if let Some(e) = first_error.take() {
        return Err(e);
    }
    let hi = hi.ok_or(Error::NoConvergence(MAX_DOUBLINGS))?;

    let (u_max, epol_max) = maximize_1d(|u| value_at(u.exp()), lo.ln(), hi.ln(), 1e-6)?;
    if let Some(e) = first_error.take() {
        return Err(e);
    }
    Ok(Crossover {
        lambda_max: u_max.exp(),
        epol_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params() -> ModelParams {
        ModelParams::default()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn short_limit_reference_value() {
        let est = epol_short_limit(&params(), &cfg()).unwrap();
        assert!(est.converged);
        assert!((est.value / -7.6e-5 - 1.0).abs() < 0.03, "value = {}", est.value);
    }

    #[test]
    fn short_limit_scales_as_alpha_squared() {
        let v = params().v;
        let a = epol_short_limit(&ModelParams::new(1.0 / 137.0, v).unwrap(), &cfg()).unwrap();
        let b = epol_short_limit(&ModelParams::new(1.0 / 274.0, v).unwrap(), &cfg()).unwrap();
        let ra = a.value / (1.0_f64 / 137.0).powi(2);
        let rb = b.value / (1.0_f64 / 274.0).powi(2);
        assert!((ra / rb - 1.0).abs() < 5e-3, "{ra} vs {rb}");
    }

    #[test]
    fn epol_approaches_short_limit() {
        let limit = epol_short_limit(&params(), &cfg()).unwrap().value;
        let e3 = epol(1e-3, &params(), &cfg()).unwrap();
        let e4 = epol(1e-4, &params(), &cfg()).unwrap();
        assert!(e3.converged && e4.converged);
        assert!((e3.value - limit).abs() / limit.abs() < 0.01);
        assert!((e3.value - e4.value).abs() / e4.value.abs() < 0.01);
    }

    #[test]
    fn no_coupling_no_energy() {
        let p = ModelParams::new(1e-160, 1.0 / 300.0).unwrap();
        let e = epol(1.0, &p, &cfg()).unwrap();
        assert!(e.value.abs() < 1e-300);
    }

    #[test]
    fn constant_c_reference() {
        let c = compute_c(&cfg()).unwrap();
        assert!(c.converged);
        assert!((c.value - 0.2132).abs() < 1e-4, "C = {}", c.value);
    }

    #[test]
    fn asymptote_scaling_and_prefactor() {
        let p = params();
        let a = epol_long_asymptote(1.0, &p).unwrap();
        let b = epol_long_asymptote(4.0, &p).unwrap();
        assert_relative_eq!(b, a / 32.0, max_relative = 1e-12);
        // √(3·137/4 / (1−v²)) · C ≈ 2.16 at the physical parameters.
        assert!((a / 2.16 - 1.0).abs() < 5e-3, "prefactor = {a}");
    }

    #[test]
    fn integrand_matches_branch_ops() {
        // The integrand must be built from the dispersion branches
        // themselves, with no independent re-derivation to drift away.
        let p = params();
        let lambda = 3.0;
        for i in 0..20 {
            let mu = 1e-2 * (1.5f64).powi(i % 12) + 1e-3 * i as f64;
            let direct = epol_integrand(mu, lambda, &p).unwrap();
            let plus = omega_coupled(mu, lambda, Sign::Plus, &p).unwrap().omega;
            let minus = omega_coupled(mu, lambda, Sign::Minus, &p).unwrap().omega;
            let single = omega_single(mu, &p).unwrap().omega;
            let rebuilt = mu * (plus + minus - 2.0 * single);
            assert!((direct - rebuilt).abs() <= 1e-12 * direct.abs().max(1e-300));
        }
    }

    #[test]
    fn sign_structure() {
        let p = params();
        assert!(epol(1.0, &p, &cfg()).unwrap().value < 0.0);
        assert!(epol(200.0, &p, &cfg()).unwrap().value > 0.0);
    }

    #[test]
    fn crossover_near_expected_separation() {
        let cross = find_crossover(&params(), &cfg()).unwrap();
        assert!((cross.lambda_max - 74.0).abs() < 1.0, "λ_max = {}", cross.lambda_max);
        assert!(cross.epol_max > 0.0);
        let below = epol(cross.lambda_max / 10.0, &params(), &cfg()).unwrap();
        assert!(below.value < cross.epol_max);
    }
}
