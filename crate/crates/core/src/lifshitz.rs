//! Total Casimir energy between the two layers: the correction factor η
//! relative to perfect mirrors, computed from the imaginary-axis double
//! integral, together with its short-distance constant, small-coupling
//! expansion and long-distance asymptote.

use std::cell::Cell;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{integrate_finite, integrate_semi_infinite, QuadratureConfig, Transform};
use crate::params::ModelParams;
use crate::reflection::r_imag_pair;

pub const HBAR: f64 = 1.054571817e-34; // J s
pub const C_LIGHT: f64 = 2.99792458e8; // m / s

/// Normalization used for a dimensionless energy ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyReference {
    /// E_perf = −(ħcπ²/720) A/L³, the perfect-mirror energy.
    PerfectMirror,
    /// E_N = ħc k_Δ³ A / 4π, the natural polaritonic scale.
    PolaritonNorm,
}

/// A dimensionless energy ratio at one separation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyResult {
    /// The ratio E / reference.
    pub value: f64,
    pub reference: EnergyReference,
    /// Propagated quadrature error estimate on `value`.
    pub error_estimate: f64,
    /// Dimensionless separation L/λ_Δ.
    pub lambda: f64,
    /// Echo of the parameters the value was computed with.
    pub params: ModelParams,
    /// False when any underlying quadrature hit its subdivision limit.
    pub converged: bool,
    /// False when `lambda` is below the trusted range of the model.
    pub model_reliable: bool,
}

/// Casimir energy of two perfect mirrors, −(ħcπ²/720)·A/L³, in joules.
pub fn e_perf(l_m: f64, area_m2: f64) -> Result<f64> {
    if !(l_m > 0.0) || !(area_m2 > 0.0) {
        return Err(Error::Domain(format!(
            "e_perf needs L > 0 and A > 0 (got {l_m}, {area_m2})"
        )));
    }
    Ok(-(HBAR * C_LIGHT * PI * PI / 720.0) * area_m2 / (l_m * l_m * l_m))
}

/// Correction factor η(λ) = E(L)/E_perf(L) from the Lifshitz formula in
/// scaled imaginary-axis variables,
///
///   η = −(45/2π⁴) ∫₀^∞ dξ̃ ∫₀^∞ dk̃ k̃ Σ_σ ln[1 − r_σ²(iξ̃, k̃; λ) e^(−κ̃)],
///
/// evaluated in polar coordinates: adaptive radial integral (exponentially
/// mapped) of adaptive angular integrals, the inner tolerance 10× tighter.
///
/// The integrand is single-signed, so the integration is run under pure
/// relative control; `cfg.rel_tol` and `cfg.max_subdivisions` are honored,
/// `cfg.abs_tol` is not used.
pub fn eta(lambda: f64, params: &ModelParams, cfg: &QuadratureConfig) -> Result<EnergyResult> {
    params.validate()?;
    cfg.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }

    let inner_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol * 0.1,
        abs_tol: 1e-300,
        max_subdivisions: cfg.max_subdivisions,
        transform: Transform::None,
    };
    let outer_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol,
        abs_tol: 0.0,
        max_subdivisions: cfg.max_subdivisions,
        transform: Transform::ExpMap,
    };

    let alpha = params.alpha;
    let v = params.v;
    let inner_ok = Cell::new(true);

    let outer = integrate_semi_infinite(
        |h| {
            if h == 0.0 {
                return 0.0;
            }
            let exp_mh = (-h).exp();
            let inner = integrate_finite(
                |t| {
                    let (sin_t, cos_t) = t.sin_cos();
                    let s = (sin_t * sin_t + v * v * cos_t * cos_t).sqrt();
                    let (r_tm, r_te) = r_imag_pair(h, h * s, lambda, alpha);
                    cos_t
                        * ((-r_tm * r_tm * exp_mh).ln_1p() + (-r_te * r_te * exp_mh).ln_1p())
                },
                0.0,
                0.5 * PI,
                &inner_cfg,
            );
            if !inner.converged {
                inner_ok.set(false);
            }
            h * h * inner.value
        },
        &outer_cfg,
    );

    let norm = -45.0 / (2.0 * PI.powi(4));
    Ok(EnergyResult {
        value: norm * outer.value,
        reference: EnergyReference::PerfectMirror,
        error_estimate: norm.abs() * outer.error_estimate,
        lambda,
        params: *params,
        converged: outer.converged && inner_ok.get(),
        model_reliable: params.model_reliable(lambda),
    })
}

/// Short-distance limit of η split into its polarization contents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortDistanceEta {
    /// η(α, v, 0) = (45/π⁴)(g_TE + g_TM).
    pub eta: f64,
    pub g_te: f64,
    pub g_tm: f64,
}

impl ShortDistanceEta {
    /// Fraction of the short-distance constant carried by the TM
    /// polarization.
    pub fn tm_share(&self) -> f64 {
        self.g_tm / (self.g_te + self.g_tm)
    }
}

/// λ → 0 constant of the correction factor,
///
///   η(α,v,0) = (45/π⁴)[g_TE + g_TM],
///   g_TE = ∫₀¹ dx ((απ/2)s / (1 + (απ/2)s))²,
///   g_TM = ∫₀¹ dx (1 / (1 + (2/απ)s))²,      s = √(x²(1−v²) + v²).
///
/// Independent of the gap size; equals the value for vanishing gap.
pub fn eta_short_limit(params: &ModelParams) -> Result<ShortDistanceEta> {
    params.validate()?;
    let cfg = QuadratureConfig::default();
    let a_half_pi = params.alpha * PI / 2.0;
    let one_m_v2 = 1.0 - params.v * params.v;
    let v2 = params.v * params.v;
    let s_of = move |x: f64| (x * x * one_m_v2 + v2).sqrt();

    let g_te = integrate_finite(
        |x| {
            let r = a_half_pi * s_of(x) / (1.0 + a_half_pi * s_of(x));
            r * r
        },
        0.0,
        1.0,
        &cfg,
    );
    let g_tm = integrate_finite(
        |x| {
            let r = 1.0 / (1.0 + s_of(x) / a_half_pi);
            r * r
        },
        0.0,
        1.0,
        &cfg,
    );
    Ok(ShortDistanceEta {
        eta: 45.0 / PI.powi(4) * (g_te.value + g_tm.value),
        g_te: g_te.value,
        g_tm: g_tm.value,
    })
}

/// Leading small-coupling expansion of the short-distance constant,
///
///   η ≈ (45/4π²) α² [ (2v² + 1)/3 + arctan(√((1−v²)/v²)) / √(v²(1−v²)) ].
///
/// Exact α² scaling by construction. The neglected corrections are
/// O(α/v), so agreement with [`eta_short_limit`] requires α ≪ v.
pub fn eta_small_alpha(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let v = params.v;
    let u = (1.0 - v * v).sqrt();
    let arctan_term = if u < 1e-8 {
        // arctan(u/v)/(v u) → 1/v² as v → 1.
        1.0 / (v * v)
    } else {
        (u / v).atan() / (v * u)
    };
    let bracket = (2.0 * v * v + 1.0) / 3.0 + arctan_term;
    Ok(45.0 / (4.0 * PI * PI) * params.alpha * params.alpha * bracket)
}

/// Long-distance asymptote of the correction factor,
///
///   η(λ ≫ 1) ≈ (240α²/π⁴λ²) [1 + (3 + 4v² + 3v⁴)/15],
///
/// turning the energy from L⁻³ into L⁻⁵.
pub fn eta_long_asymptote(lambda: f64, params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }
    let v2 = params.v * params.v;
    let bracket = 1.0 + (3.0 + 4.0 * v2 + 3.0 * v2 * v2) / 15.0;
    Ok(240.0 * params.alpha * params.alpha / (PI.powi(4) * lambda * lambda) * bracket)
}
