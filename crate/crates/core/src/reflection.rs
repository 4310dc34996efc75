//! Polarization-tensor entries and single-layer reflection coefficients,
//! on the real frequency axis (evanescent sector, below the pair-creation
//! threshold) and on the imaginary frequency axis.
//!
//! Everything is dimensionless: frequencies and wavevectors are scaled by
//! the gap wavelength λ_Δ, and the tensor entries carry their α/λ_Δ
//! prefactor as a unit tag so no physical scale ever enters the floats.

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::specfun::{phi, psi_over_p2_raw};

/// Field polarization with respect to the plane of incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarization {
    TM,
    TE,
}

/// A point of the evanescent sector below the pair-creation threshold:
/// Ω < K (real decay constant μ) and p < 1 (no pair creation).
///
/// `atanh_p` duplicates artanh(p) at full precision. Dispersion branches
/// drive p exponentially close to 1, where the f64 value of p alone can no
/// longer represent the point; carrying artanh(p) keeps the reflection
/// coefficients exact there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvanescentPoint {
    /// Scaled frequency Ω = ωλ_Δ/c.
    pub omega: f64,
    /// Scaled wavevector K = kλ_Δ.
    pub k: f64,
    /// Transverse decay constant μ = √(K² − Ω²).
    pub mu: f64,
    /// Dirac-sector momentum p = √(Ω² − v²K²).
    pub p: f64,
    /// artanh(p).
    pub atanh_p: f64,
}

impl EvanescentPoint {
    /// Point from scaled frequency and wavevector. Errors unless
    /// 0 ≤ μ and 0 < p < 1.
    pub fn from_omega_k(omega: f64, k: f64, params: &ModelParams) -> Result<Self> {
        params.validate()?;
        let mu2 = k * k - omega * omega;
        let p2 = omega * omega - params.v * params.v * k * k;
        if mu2 < 0.0 {
            return Err(Error::Domain(format!(
                "(Ω, K) = ({omega}, {k}) lies above the light cone (propagating sector)"
            )));
        }
        if !(p2 > 0.0) {
            return Err(Error::Domain(format!(
                "(Ω, K) = ({omega}, {k}) has p² = {p2} <= 0"
            )));
        }
        if p2 >= 1.0 {
            return Err(Error::Domain(format!(
                "(Ω, K) = ({omega}, {k}) is above the pair-creation threshold (p = {})",
                p2.sqrt()
            )));
        }
        let p = p2.sqrt();
        Ok(Self {
            omega,
            k,
            mu: mu2.sqrt(),
            p,
            atanh_p: p.atanh(),
        })
    }

    /// Point from the parameter pair (μ, p); Ω and K are derived.
    pub fn from_mu_p(mu: f64, p: f64, params: &ModelParams) -> Result<Self> {
        params.validate()?;
        if !(mu >= 0.0) {
            return Err(Error::Domain(format!("mu = {mu} must be >= 0")));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("p = {p} outside (0, 1)")));
        }
        Ok(Self::from_mu_p_atanh(mu, p, p.atanh(), params))
    }

    /// Internal constructor when artanh(p) is already known exactly.
    pub(crate) fn from_mu_p_atanh(mu: f64, p: f64, atanh_p: f64, params: &ModelParams) -> Self {
        let one_m_v2 = 1.0 - params.v * params.v;
        let omega = ((params.v * params.v * mu * mu + p * p) / one_m_v2).sqrt();
        let k = ((mu * mu + p * p) / one_m_v2).sqrt();
        Self {
            omega,
            k,
            mu,
            p,
            atanh_p,
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(Error::Domain(format!("p = {} outside (0, 1)", self.p)));
        }
        if !(self.mu >= 0.0) {
            return Err(Error::Domain(format!("mu = {} must be >= 0", self.mu)));
        }
        Ok(())
    }
}

/// A point on the positive imaginary frequency axis in the scaled
/// variables used by the Lifshitz integral: ξ̃ = 2λξλ_Δ/c, k̃ = 2λkλ_Δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryAxisPoint {
    pub xi: f64,
    pub k: f64,
    /// κ̃ = √(k̃² + ξ̃²).
    pub kappa: f64,
    /// ρ̃ = √(ξ̃² + v²k̃²); κ̃ ≥ ρ̃ since v < 1.
    pub rho: f64,
}

impl ImaginaryAxisPoint {
    pub fn new(xi: f64, k: f64, params: &ModelParams) -> Result<Self> {
        params.validate()?;
        if !(xi >= 0.0 && k >= 0.0) {
            return Err(Error::Domain(format!(
                "imaginary-axis point needs xi >= 0 and k >= 0 (got {xi}, {k})"
            )));
        }
        Ok(Self {
            xi,
            k,
            kappa: xi.hypot(k),
            rho: xi.hypot(params.v * k),
        })
    }
}

/// Polarization-tensor entry in units of α/λ_Δ.
///
/// The prefactor is kept symbolic (this tag) so values stay O(1) and the
/// physical scale λ_Δ never enters the arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiEntry {
    pub value: f64,
}

/// Reflection coefficient with a flag raised when the evaluation sits
/// within 1e-14 of the TE pole (the surface-polariton resonance).
/// Dispersion solvers intentionally probe near the pole, so proximity is
/// reported rather than treated as an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reflection {
    pub value: f64,
    pub pole_proximity: bool,
}

const POLE_WINDOW: f64 = 1e-14;

/// 00-entry of the polarization tensor: 2K²ψ(p)/p², in units of α/λ_Δ.
pub fn pi_00(point: &EvanescentPoint, params: &ModelParams) -> Result<PiEntry> {
    params.validate()?;
    if point.k == 0.0 {
        return Ok(PiEntry { value: 0.0 });
    }
    point.check()?;
    Ok(PiEntry {
        value: 2.0 * point.k * point.k * psi_over_p2_raw(point.p, point.atanh_p),
    })
}

/// Trace entry of the polarization tensor: 2(μ² − p²)ψ(p)/p², in units of
/// α/λ_Δ.
pub fn pi_tr(point: &EvanescentPoint, params: &ModelParams) -> Result<PiEntry> {
    params.validate()?;
    point.check()?;
    let diff = point.mu * point.mu - point.p * point.p;
    Ok(PiEntry {
        value: 2.0 * diff * psi_over_p2_raw(point.p, point.atanh_p),
    })
}

/// Reflection coefficient assembled from the general tensor expressions,
///
///   r_TM = μ Π₀₀ / (μ Π₀₀ + 2K²),
///   r_TE = (μ² Π₀₀ − K² Π_tr) / (K² Π_tr + 2K²μ − μ² Π₀₀),
///
/// with the α/λ_Δ unit of the entries made explicit. Algebraically
/// identical to [`r_t0`]; kept as an independent route for
/// cross-validation.
pub fn r_general(
    point: &EvanescentPoint,
    params: &ModelParams,
    pol: Polarization,
) -> Result<Reflection> {
    let w00 = params.alpha * pi_00(point, params)?.value;
    let wtr = params.alpha * pi_tr(point, params)?.value;
    point.check()?;
    let (mu, k2) = (point.mu, point.k * point.k);
    let value = match pol {
        Polarization::TM => {
            let num = mu * w00;
            num / (num + 2.0 * k2)
        }
        Polarization::TE => {
            let num = mu * mu * w00 - k2 * wtr;
            num / (k2 * wtr + 2.0 * k2 * mu - mu * mu * w00)
        }
    };
    Ok(Reflection {
        value,
        pole_proximity: te_pole_distance(point, params) < POLE_WINDOW,
    })
}

fn te_pole_distance(point: &EvanescentPoint, params: &ModelParams) -> f64 {
    let psi = psi_over_p2_raw(point.p, point.atanh_p) * point.p * point.p;
    (params.alpha * psi - point.mu).abs()
}

/// Zero-temperature reflection coefficients of one undoped layer,
///
///   r_TM = αμψ(p) / (αμψ(p) + p²),
///   r_TE = −αψ(p) / (αψ(p) − μ).
///
/// r_TM ∈ [0, 1) has no pole; r_TE has a pole on the locus αψ(p) = μ (the
/// TE surface polariton), reported through `pole_proximity`.
pub fn r_t0(point: &EvanescentPoint, params: &ModelParams, pol: Polarization) -> Result<Reflection> {
    params.validate()?;
    point.check()?;
    let w = psi_over_p2_raw(point.p, point.atanh_p); // ψ/p²
    let value = match pol {
        Polarization::TM => {
            // αμψ / (αμψ + p²) = αμ(ψ/p²) / (αμ(ψ/p²) + 1)
            let num = params.alpha * point.mu * w;
            num / (num + 1.0)
        }
        Polarization::TE => {
            let apsi = params.alpha * w * point.p * point.p;
            -apsi / (apsi - point.mu)
        }
    };
    Ok(Reflection {
        value,
        pole_proximity: te_pole_distance(point, params) < POLE_WINDOW,
    })
}

/// Both imaginary-axis coefficients at once, sharing the φ evaluation.
/// Returns (r_TM, r_TE). Arguments are the scaled κ̃, ρ̃ at separation λ.
pub(crate) fn r_imag_pair(kappa: f64, rho: f64, lambda: f64, alpha: f64) -> (f64, f64) {
    if rho == 0.0 {
        // Only at the origin ξ̃ = k̃ = 0, where both coefficients vanish.
        return (0.0, 0.0);
    }
    let ph = phi(rho / (2.0 * lambda)).expect("rho/2λ >= 0");
    let two_lam_alpha_phi = 2.0 * lambda * alpha * ph;
    let r_tm = two_lam_alpha_phi * kappa / (two_lam_alpha_phi * kappa + rho * rho);
    let r_te = -two_lam_alpha_phi / (kappa + two_lam_alpha_phi);
    (r_tm, r_te)
}

/// Reflection coefficient on the imaginary frequency axis,
///
///   r_TM = 2λακ̃φ(ρ̃/2λ) / (2λακ̃φ(ρ̃/2λ) + ρ̃²),
///   r_TE = −2λαφ(ρ̃/2λ) / (κ̃ + 2λαφ(ρ̃/2λ)),
///
/// satisfying 0 ≤ r_TM < 1 and −1 < r_TE ≤ 0 (no pole anywhere).
pub fn r_imag(
    point: &ImaginaryAxisPoint,
    lambda: f64,
    params: &ModelParams,
    pol: Polarization,
) -> Result<f64> {
    params.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }
    let (r_tm, r_te) = r_imag_pair(point.kappa, point.rho, lambda, params.alpha);
    Ok(match pol {
        Polarization::TM => r_tm,
        Polarization::TE => r_te,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const PSI_HALF: f64 = 0.373265360835137;

    fn params() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn point_construction_and_consistency() {
        let params = params();
        let pt = EvanescentPoint::from_mu_p(1.0, 0.5, &params).unwrap();
        assert_relative_eq!(pt.k * pt.k - pt.omega * pt.omega, 1.0, max_relative = 1e-12);
        assert_relative_eq!(
            pt.omega * pt.omega - params.v * params.v * pt.k * pt.k,
            0.25,
            max_relative = 1e-12
        );
        let back = EvanescentPoint::from_omega_k(pt.omega, pt.k, &params).unwrap();
        assert_relative_eq!(back.mu, 1.0, max_relative = 1e-10);
        assert_relative_eq!(back.p, 0.5, max_relative = 1e-10);
    }

    #[test]
    fn point_domain_errors() {
        let params = params();
        // Above the light cone.
        assert!(EvanescentPoint::from_omega_k(2.0, 1.0, &params).is_err());
        // Above the pair-creation threshold.
        assert!(EvanescentPoint::from_mu_p(1.0, 1.2, &params).is_err());
        assert!(EvanescentPoint::from_mu_p(-0.5, 0.5, &params).is_err());
    }

    #[test]
    fn pi_00_values() {
        let params = params();
        // p = 0.5, K = 1 (mu adjusted so K comes out at 1 is not needed;
        // the entry only reads K and p).
        let pt = EvanescentPoint {
            omega: 0.5,
            k: 1.0,
            mu: (1.0_f64 - 0.25).sqrt(),
            p: 0.5,
            atanh_p: 0.5_f64.atanh(),
        };
        assert_relative_eq!(
            pi_00(&pt, &params).unwrap().value,
            2.0 * PSI_HALF / 0.25,
            max_relative = 1e-13
        );

        // K = 0 kills the entry through its prefactor.
        let origin = EvanescentPoint {
            omega: 0.0,
            k: 0.0,
            mu: 0.0,
            p: 0.5,
            atanh_p: 0.5_f64.atanh(),
        };
        assert_eq!(pi_00(&origin, &params).unwrap().value, 0.0);

        // Small p at fixed K: 2K²ψ/p² → 8K²/3.
        let small = EvanescentPoint::from_mu_p(1e-3, 1e-7, &params).unwrap();
        let scaled = pi_00(&small, &params).unwrap().value / (small.k * small.k);
        assert_relative_eq!(scaled, 8.0 / 3.0, max_relative = 1e-7);
    }

    #[test]
    fn pi_tr_values() {
        let params = params();
        let pt = EvanescentPoint {
            omega: 0.5,
            k: 1.0,
            mu: 1.0,
            p: 0.5,
            atanh_p: 0.5_f64.atanh(),
        };
        assert_relative_eq!(
            pi_tr(&pt, &params).unwrap().value,
            2.0 * 0.75 * PSI_HALF / 0.25,
            max_relative = 1e-13
        );

        // mu = p zeroes the numerator.
        let degenerate = EvanescentPoint::from_mu_p(0.5, 0.5, &params).unwrap();
        assert!(pi_tr(&degenerate, &params).unwrap().value.abs() < 1e-15);

        // p → 0 at fixed mu: 2μ²ψ/p² → (8/3)μ².
        let small = EvanescentPoint::from_mu_p(2.0, 1e-7, &params).unwrap();
        assert_relative_eq!(pi_tr(&small, &params).unwrap().value, 8.0 / 3.0 * 4.0, max_relative = 1e-6);
    }

    #[test]
    fn r_t0_reference_values() {
        let params = params();
        let pt = EvanescentPoint::from_mu_p(1.0, 0.5, &params).unwrap();
        let alpha = params.alpha;
        let expected_tm = alpha * PSI_HALF / (alpha * PSI_HALF + 0.25);
        assert_relative_eq!(
            r_t0(&pt, &params, Polarization::TM).unwrap().value,
            expected_tm,
            max_relative = 1e-12
        );
        let expected_te = -alpha * PSI_HALF / (alpha * PSI_HALF - 1.0);
        assert_relative_eq!(
            r_t0(&pt, &params, Polarization::TE).unwrap().value,
            expected_te,
            max_relative = 1e-12
        );
    }

    #[test]
    fn alpha_to_zero_kills_reflection() {
        let params = ModelParams::new(1e-300, 1.0 / 300.0).unwrap();
        let pt = EvanescentPoint::from_mu_p(1.0, 0.5, &params).unwrap();
        for pol in [Polarization::TM, Polarization::TE] {
            assert!(r_t0(&pt, &params, pol).unwrap().value.abs() < 1e-290);
            assert!(r_general(&pt, &params, pol).unwrap().value.abs() < 1e-290);
        }
    }

    #[test]
    fn light_cone_limit() {
        // μ = 0, 0 < p < 1: r_TM = 0 and r_TE = -1 (so that the light cone
        // solves the antisymmetric resonance condition -1/r_TE = e^0).
        let params = params();
        let pt = EvanescentPoint::from_mu_p(0.0, 0.3, &params).unwrap();
        assert_eq!(r_t0(&pt, &params, Polarization::TM).unwrap().value, 0.0);
        assert_relative_eq!(
            r_t0(&pt, &params, Polarization::TE).unwrap().value,
            -1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn te_pole_is_flagged() {
        let params = params();
        let p = 0.5;
        let mu = params.alpha * PSI_HALF; // exactly on the polariton locus
        let pt = EvanescentPoint::from_mu_p(mu, p, &params).unwrap();
        let r = r_t0(&pt, &params, Polarization::TE).unwrap();
        assert!(r.pole_proximity);
        assert!(r.value.abs() > 1e10);
        // TM stays regular there.
        let tm = r_t0(&pt, &params, Polarization::TM).unwrap();
        assert!(tm.value >= 0.0 && tm.value < 1.0);
    }

    #[test]
    fn general_reduces_to_t0() {
        let params = params();
        for i in 0..25 {
            for j in 0..25 {
                let mu = 10.0 * (i as f64 + 0.5) / 25.0;
                let p = 0.99 * (j as f64 + 0.5) / 25.0;
                let pt = EvanescentPoint::from_mu_p(mu, p.max(1e-6), &params).unwrap();
                for pol in [Polarization::TM, Polarization::TE] {
                    let a = r_general(&pt, &params, pol).unwrap().value;
                    let b = r_t0(&pt, &params, pol).unwrap().value;
                    assert_relative_eq!(a, b, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn imaginary_axis_bounds_and_limits() {
        let params = params();
        for &lambda in &[1e-3, 1.0, 1e3] {
            for i in 1..=20 {
                for j in 1..=20 {
                    let xi = i as f64;
                    let k = j as f64;
                    let pt = ImaginaryAxisPoint::new(xi, k, &params).unwrap();
                    let tm = r_imag(&pt, lambda, &params, Polarization::TM).unwrap();
                    let te = r_imag(&pt, lambda, &params, Polarization::TE).unwrap();
                    assert!((0.0..1.0).contains(&tm));
                    assert!(te <= 0.0 && te > -1.0);
                }
            }
        }
    }

    #[test]
    fn imaginary_axis_short_separation_limit() {
        // λ → 0 at fixed point: φ(x) ≈ πx/2 turns the coefficients into
        // the gapless forms.
        let params = params();
        let lambda = 1e-9;
        let pt = ImaginaryAxisPoint::new(0.7, 1.3, &params).unwrap();
        let apih = params.alpha * std::f64::consts::FRAC_PI_2;
        let tm_expect = apih * pt.kappa / (apih * pt.kappa + pt.rho);
        let te_expect = -apih * pt.rho / (pt.kappa + apih * pt.rho);
        assert_relative_eq!(
            r_imag(&pt, lambda, &params, Polarization::TM).unwrap(),
            tm_expect,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            r_imag(&pt, lambda, &params, Polarization::TE).unwrap(),
            te_expect,
            max_relative = 1e-6
        );
    }

    #[test]
    fn imaginary_axis_long_separation_limit() {
        // λ → ∞: φ(x) ≈ 4x²/3 gives the dielectric-like small reflectivity.
        let params = params();
        let lambda = 1e7;
        let pt = ImaginaryAxisPoint::new(0.7, 1.3, &params).unwrap();
        let te_expect = -(2.0 / 3.0) * params.alpha / lambda * pt.rho * pt.rho / pt.kappa;
        let tm_expect = (2.0 / 3.0) * params.alpha / lambda * pt.kappa;
        assert_relative_eq!(
            r_imag(&pt, lambda, &params, Polarization::TE).unwrap(),
            te_expect,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            r_imag(&pt, lambda, &params, Polarization::TM).unwrap(),
            tm_expect,
            max_relative = 1e-6
        );
    }

    #[test]
    fn ultraviolet_nontransparency() {
        // Along p → 1⁻ the TE coefficient stays bounded away from zero at
        // the α scale instead of vanishing.
        let params = params();
        for &p in &[0.9999, 0.999999, 1.0 - 1e-9] {
            let pt = EvanescentPoint::from_mu_p(1.0, p, &params).unwrap();
            let te = r_t0(&pt, &params, Polarization::TE).unwrap().value;
            assert!(te.abs() > params.alpha / 2.0, "p = {p}: |r_TE| = {}", te.abs());
        }
    }
}
