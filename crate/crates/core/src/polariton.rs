//! TE surface-polariton dispersion relations: the single-layer branch, the
//! two branches of the coupled bilayer, the light-cone endpoint of the
//! antisymmetric branch, and curve sampling.
//!
//! All branches are parametrized by the transverse decay constant μ, on
//! which the closed forms are exact and monotone; no root finding in the
//! (Ω, K) plane is ever needed to walk a branch.

use crate::error::{Error, Result};
use crate::numerics::find_root_monotone;
use crate::params::ModelParams;
use crate::reflection::EvanescentPoint;
use crate::specfun::{f_pm, psi_inv_full, PsiInverse, Sign};

/// Identity of a dispersion branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Isolated layer.
    Single,
    /// Symmetric coupled mode Ω₋ (lower branch).
    SymmetricMinus,
    /// Antisymmetric coupled mode Ω₊ (upper branch).
    AntisymmetricPlus,
    /// Bookkeeping continuation of the antisymmetric branch along Ω = K
    /// below its light-cone endpoint, preserving the mode count.
    LightConeContinuation,
}

/// One sample of a polariton branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint {
    /// Transverse decay constant (the curve parameter).
    pub mu: f64,
    /// Scaled frequency Ω.
    pub omega: f64,
    /// Scaled wavevector K.
    pub k: f64,
    /// Dirac-sector momentum p ∈ [0, 1).
    pub p: f64,
    /// artanh(p) at full precision (p saturates in f64 near 1).
    pub atanh_p: f64,
    pub branch: Branch,
}

impl DispersionPoint {
    fn from_inverse(mu: f64, inv: &PsiInverse, branch: Branch, params: &ModelParams) -> Self {
        let one_m_v2 = 1.0 - params.v * params.v;
        let p2 = inv.p * inv.p;
        Self {
            mu,
            omega: ((params.v * params.v * mu * mu + p2) / one_m_v2).sqrt(),
            k: ((mu * mu + p2) / one_m_v2).sqrt(),
            p: inv.p,
            atanh_p: inv.atanh_p,
            branch,
        }
    }

    /// The same point as an input to the reflection coefficients.
    pub fn to_evanescent(&self, params: &ModelParams) -> EvanescentPoint {
        EvanescentPoint::from_mu_p_atanh(self.mu, self.p, self.atanh_p, params)
    }
}

/// Single-layer TE polariton, parametrized by μ ≥ 0:
///
///   p = ψ⁻¹(μ/α),  Ω₀ = √((v²μ² + p²)/(1−v²)),  K₀ = √((μ² + p²)/(1−v²)).
///
/// Starts at the origin, stays below the light cone and tends to the
/// pair-creation threshold for μ → ∞.
pub fn omega_single(mu: f64, params: &ModelParams) -> Result<DispersionPoint> {
    params.validate()?;
    if !(mu >= 0.0) {
        return Err(Error::Domain(format!("mu = {mu} must be >= 0")));
    }
    let inv = psi_inv_full(mu / params.alpha)?;
    Ok(DispersionPoint::from_inverse(mu, &inv, Branch::Single, params))
}

/// Coupled bilayer polariton at separation λ:
///
///   p = ψ⁻¹((μ/α)·f±(μλ)),
///
/// with the same square-root forms as the single layer. `Sign::Plus` is
/// the antisymmetric mode (needs μ > 0), `Sign::Minus` the symmetric one.
pub fn omega_coupled(
    mu: f64,
    lambda: f64,
    sign: Sign,
    params: &ModelParams,
) -> Result<DispersionPoint> {
    params.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }
    if !(mu >= 0.0) {
        return Err(Error::Domain(format!("mu = {mu} must be >= 0")));
    }
    let branch = match sign {
        Sign::Plus => Branch::AntisymmetricPlus,
        Sign::Minus => Branch::SymmetricMinus,
    };
    let y = (mu / params.alpha) * f_pm(mu * lambda, sign)?;
    let inv = psi_inv_full(y)?;
    Ok(DispersionPoint::from_inverse(mu, &inv, branch, params))
}

/// μ → 0 endpoint of the antisymmetric branch, where y → 1/(αλ) and the
/// branch meets the light cone.
fn plus_branch_endpoint(lambda: f64, params: &ModelParams) -> Result<DispersionPoint> {
    let inv = psi_inv_full(1.0 / (params.alpha * lambda))?;
    Ok(DispersionPoint::from_inverse(
        0.0,
        &inv,
        Branch::AntisymmetricPlus,
        params,
    ))
}

/// Wavevector K_lc = ψ⁻¹(1/(αλ)) / √(1−v²) where the antisymmetric branch
/// becomes tangent to the light cone; the branch exists only for K ≥ K_lc.
pub fn k_lightcone(lambda: f64, params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be > 0")));
    }
    let inv = psi_inv_full(1.0 / (params.alpha * lambda))?;
    Ok(inv.p / (1.0 - params.v * params.v).sqrt())
}

/// Pair-creation threshold frequency Ω_pc(K) = √(1 + v²K²), the upper
/// bound of every polariton branch.
pub fn pair_creation_threshold(k: f64, params: &ModelParams) -> f64 {
    (1.0 + params.v * params.v * k * k).sqrt()
}

/// Ω₊ of the antisymmetric branch at a given wavevector K > K_lc, by
/// inverting the strictly increasing K₊(μ).
pub fn omega_plus_of_k(k: f64, lambda: f64, params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let k_lc = k_lightcone(lambda, params)?;
    if !(k > k_lc) {
        return Err(Error::Domain(format!(
            "k = {k} must exceed the light-cone endpoint K_lc = {k_lc}"
        )));
    }
    let hi = k * (1.0 - params.v * params.v).sqrt() + 1e-9;
    let mu = find_root_monotone(
        |m| match omega_coupled(m.max(1e-12), lambda, Sign::Plus, params) {
            Ok(pt) => pt.k - k,
            Err(_) => f64::NAN,
        },
        1e-12,
        hi,
        1e-15 * hi,
    )?;
    Ok(omega_coupled(mu.max(1e-12), lambda, Sign::Plus, params)?.omega)
}

/// Grid spacing for curve sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Linear,
    Log,
}

/// How a curve was sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub kind: GridKind,
    pub k_max: f64,
    pub n: usize,
}

/// Ordered samples of one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub branch: Branch,
    /// Separation; `None` for the single-layer branch.
    pub lambda: Option<f64>,
    /// Samples strictly increasing in k.
    pub samples: Vec<DispersionPoint>,
    pub params: ModelParams,
    pub grid: GridSpec,
}

/// Span of the log-spaced μ grids, relative to the largest μ.
const LOG_SPAN: f64 = 1e-6;

fn mu_grid(mu_max: f64, n: usize, kind: GridKind) -> Vec<f64> {
    let mut grid = Vec::with_capacity(n);
    match kind {
        GridKind::Linear => {
            for i in 0..n {
                grid.push(mu_max * i as f64 / (n - 1) as f64);
            }
        }
        GridKind::Log => {
            // The branch endpoint μ = 0 is always part of the curve.
            grid.push(0.0);
            let m = n - 1;
            for i in 0..m {
                let u = if m == 1 { 1.0 } else { i as f64 / (m - 1) as f64 };
                grid.push(mu_max * LOG_SPAN.powf(1.0 - u));
            }
        }
    }
    grid
}

/// μ with K_branch(μ) = k_target, exploiting monotonicity of K(μ).
fn invert_k<F: FnMut(f64) -> Result<f64>>(mut k_of: F, k_target: f64, v: f64) -> Result<f64> {
    let hi = k_target * (1.0 - v * v).sqrt() + 1e-9;
    find_root_monotone(
        |m| match k_of(m) {
            Ok(k) => k - k_target,
            Err(_) => f64::NAN,
        },
        1e-12,
        hi,
        1e-14 * hi,
    )
}

/// Sample one branch so the resulting K values cover (0, k_max].
///
/// For the antisymmetric branch the physical samples start at K_lc and the
/// light-cone continuation Ω = K is prepended on [0, K_lc) as explicitly
/// tagged points; it is never merged silently into the physical branch.
pub fn sample_curve(
    branch: Branch,
    lambda: Option<f64>,
    k_max: f64,
    n: usize,
    params: &ModelParams,
    grid: GridKind,
) -> Result<Curve> {
    params.validate()?;
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n} must be >= 2")));
    }
    if !(k_max > 0.0) {
        return Err(Error::InvalidParams(format!("k_max = {k_max} must be > 0")));
    }
    let lam = match (branch, lambda) {
        (Branch::Single, _) => None,
        (_, Some(l)) if l > 0.0 => Some(l),
        (_, bad) => {
            return Err(Error::InvalidParams(format!(
                "branch {branch:?} needs a positive separation, got {bad:?}"
            )))
        }
    };

    let spec = GridSpec { kind: grid, k_max, n };
    let mut samples = Vec::with_capacity(n);

    match branch {
        Branch::Single => {
            let mu_max = invert_k(|m| Ok(omega_single(m, params)?.k), k_max, params.v)?;
            for mu in mu_grid(mu_max, n, grid) {
                samples.push(omega_single(mu, params)?);
            }
        }
        Branch::SymmetricMinus => {
            let l = lam.unwrap();
            let mu_max = invert_k(
                |m| Ok(omega_coupled(m, l, Sign::Minus, params)?.k),
                k_max,
                params.v,
            )?;
            for mu in mu_grid(mu_max, n, grid) {
                samples.push(omega_coupled(mu, l, Sign::Minus, params)?);
            }
        }
        Branch::AntisymmetricPlus => {
            let l = lam.unwrap();
            let k_lc = k_lightcone(l, params)?;
            if k_max <= k_lc {
                // Nothing of the physical branch fits; emit continuation only.
                push_continuation(&mut samples, k_max, n, false, params);
            } else {
                let n_lc = ((n as f64 * k_lc / k_max).round() as usize).clamp(2, (n - 2).max(2));
                let n_phys = (n - n_lc.min(n)).max(2);
                push_continuation(&mut samples, k_lc, n_lc, true, params);
                let mu_max = invert_k(
                    |m| Ok(omega_coupled(m.max(1e-12), l, Sign::Plus, params)?.k),
                    k_max,
                    params.v,
                )?;
                for mu in mu_grid(mu_max, n_phys, grid) {
                    let pt = if mu == 0.0 {
                        plus_branch_endpoint(l, params)?
                    } else {
                        omega_coupled(mu, l, Sign::Plus, params)?
                    };
                    samples.push(pt);
                }
            }
        }
        Branch::LightConeContinuation => {
            let l = lam.unwrap();
            let k_lc = k_lightcone(l, params)?;
            push_continuation(&mut samples, k_max.min(k_lc), n, k_max > k_lc, params);
        }
    }

    // Defensive: the construction is monotone, but a duplicated k would
    // silently break consumers that resample.
    for w in samples.windows(2) {
        if !(w[1].k > w[0].k) {
            return Err(Error::Domain(format!(
                "curve sampling produced non-increasing k near k = {}",
                w[0].k
            )));
        }
    }

    Ok(Curve {
        branch,
        lambda: lam,
        samples,
        params: *params,
        grid: spec,
    })
}

/// Points Ω = K on [0, k_end) (half-open unless `closed`).
fn push_continuation(
    out: &mut Vec<DispersionPoint>,
    k_end: f64,
    n: usize,
    half_open: bool,
    params: &ModelParams,
) {
    let denom = if half_open { n } else { n - 1 } as f64;
    let sq = (1.0 - params.v * params.v).sqrt();
    for i in 0..n {
        let k = k_end * i as f64 / denom;
        let p = k * sq;
        out.push(DispersionPoint {
            mu: 0.0,
            omega: k,
            k,
            p,
            atanh_p: p.atanh(),
            branch: Branch::LightConeContinuation,
        });
    }
}
