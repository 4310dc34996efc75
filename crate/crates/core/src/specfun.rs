//! Scalar special functions of the gapped-layer response: ψ, its complex
//! continuation above the pair-creation threshold, the imaginary-axis
//! companion φ, the numerical inverse of ψ, and the mode-coupling factors
//! f±.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest f64 strictly below 1.
pub(crate) const ONE_MINUS_ULP: f64 = 1.0 - f64::EPSILON / 2.0;

/// Branch selector for the coupling factor [`f_pm`] and the coupled
/// dispersion relations: `Plus` is the antisymmetric combination, `Minus`
/// the symmetric one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// ψ(p) = (p + 1/p)·artanh(p) − 1 on 0 < p < 1.
///
/// Strictly positive, strictly increasing, ~ 4p²/3 as p → 0 and divergent
/// as p → 1⁻. For small p the closed form loses all digits to the
/// cancellation against the −1, so a series is used there.
pub fn psi(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("psi: p = {p} outside (0, 1)")));
    }
    Ok(psi_over_p2_raw(p, p.atanh()) * p * p)
}

/// ψ(p)/p², stable down to p = 0 (limit 4/3). `atanh_p` must equal
/// artanh(p); it is threaded through so callers holding a high-precision
/// artanh near p = 1 keep it.
pub(crate) fn psi_over_p2_raw(p: f64, atanh_p: f64) -> f64 {
    let p2 = p * p;
    if p < 1e-2 {
        // (p + 1/p) artanh(p) - 1 = 4p²/3 + 8p⁴/15 + 12p⁶/35 + ...
        4.0 / 3.0 + p2 * (8.0 / 15.0 + p2 * (12.0 / 35.0 + p2 * (16.0 / 63.0)))
    } else {
        ((p + 1.0 / p) * atanh_p - 1.0) / p2
    }
}

/// ψ evaluated from the pair (p, artanh p); exact in the deep tail where
/// p itself has rounded to 1.
pub(crate) fn psi_from_atanh(p: f64, atanh_p: f64) -> f64 {
    if p < 1e-2 {
        psi_over_p2_raw(p, atanh_p) * p * p
    } else {
        (p + 1.0 / p) * atanh_p - 1.0
    }
}

/// Analytic continuation of ψ above the pair-creation threshold (p > 1).
///
/// artanh is continued as ½ln((1+p)/(p−1)) + iπ/2 on the branch with
/// Im ψ > 0, the sign describing conversion of field energy into
/// electron-hole pairs. Satisfies ψ(p) → iπp/2 for p ≫ 1.
pub fn psi_complex(p: f64) -> Result<Complex64> {
    if !(p > 1.0) {
        return Err(Error::Domain(format!("psi_complex: p = {p} must be > 1")));
    }
    let pref = p + 1.0 / p;
    let re_atanh = 0.5 * ((1.0 + p) / (p - 1.0)).ln();
    Ok(Complex64::new(
        pref * re_atanh - 1.0,
        pref * std::f64::consts::FRAC_PI_2,
    ))
}

/// φ(x) = −ψ(ix) = 1 + (x − 1/x)·arctan(x) on x ≥ 0.
///
/// Nonnegative and strictly increasing; φ(0) = 0 by continuous limit,
/// φ(1) = 1 exactly, φ(x) ≈ 4x²/3 for small x and φ(x) ≈ πx/2 for large x.
pub fn phi(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("phi: x = {x} must be >= 0")));
    }
    let x2 = x * x;
    if x < 1e-2 {
        // Alternating companion of the psi series.
        Ok(x2 * (4.0 / 3.0 - x2 * (8.0 / 15.0 - x2 * (12.0 / 35.0 - x2 * (16.0 / 63.0)))))
    } else {
        Ok(1.0 + (x - 1.0 / x) * x.atan())
    }
}

/// Inverse of ψ carrying both p and artanh(p).
///
/// For large arguments p approaches 1 so fast that the f64 value of p
/// saturates while artanh(p) is still a perfectly ordinary number; keeping
/// the pair lets downstream code evaluate ψ(p) without losing the tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiInverse {
    /// p = ψ⁻¹(y), clamped to [0, 1).
    pub p: f64,
    /// artanh(p) at full precision.
    pub atanh_p: f64,
}

impl PsiInverse {
    /// ψ(p) reconstructed from the stored pair.
    pub fn psi(&self) -> f64 {
        if self.p == 0.0 {
            0.0
        } else {
            psi_from_atanh(self.p, self.atanh_p)
        }
    }
}

/// ψ as a function of s = artanh(p): ψ(tanh s) = 2s·coth(2s) − 1. The
/// series arm avoids the 1-cancellation at small s.
fn psi_of_s(s: f64) -> f64 {
    let s2 = s * s;
    if s < 1e-2 {
        s2 * (4.0 / 3.0 - s2 * (16.0 / 45.0 - s2 * (128.0 / 945.0)))
    } else if s > 19.0 {
        let e = (4.0 * s).exp_m1();
        if e.is_finite() {
            2.0 * s * (1.0 + 2.0 / e) - 1.0
        } else {
            2.0 * s - 1.0
        }
    } else {
        2.0 * s / (2.0 * s).tanh() - 1.0
    }
}

fn psi_of_s_prime(s: f64) -> f64 {
    let s2 = s * s;
    if s < 1e-2 {
        s * (8.0 / 3.0 - s2 * (64.0 / 45.0 - s2 * (256.0 / 315.0)))
    } else if s > 19.0 {
        2.0
    } else {
        let c = 1.0 / (2.0 * s).tanh();
        2.0 * c - 4.0 * s * (c * c - 1.0)
    }
}

/// The unique p ∈ [0, 1) with ψ(p) = y, together with artanh(p).
///
/// Solved as 2s·coth(2s) − 1 = y in s = artanh(p), which is smooth and
/// convex on (0, ∞) and free of the p → 1 saturation; Newton from the
/// asymptotic seeds (√(3y)/2 for small y, (y+1)/2 for large y) converges
/// quadratically everywhere.
pub fn psi_inv_full(y: f64) -> Result<PsiInverse> {
    if !(y >= 0.0) {
        return Err(Error::Domain(format!("psi_inv: y = {y} must be >= 0")));
    }
    if y == 0.0 {
        return Ok(PsiInverse { p: 0.0, atanh_p: 0.0 });
    }
    if y.is_infinite() {
        return Ok(PsiInverse {
            p: ONE_MINUS_ULP,
            atanh_p: f64::INFINITY,
        });
    }

    // (y+1)/2 is always an upper bound (coth >= 1); for small y the
    // quadratic seed lands much closer.
    let mut s = if y < 0.1 {
        0.5 * (3.0 * y).sqrt()
    } else {
        0.5 * (y + 1.0)
    };

    const MAX_ITER: usize = 100;
    for _ in 0..MAX_ITER {
        let g = psi_of_s(s) - y;
        let step = g / psi_of_s_prime(s);
        let mut s_next = s - step;
        if s_next <= 0.0 {
            s_next = 0.5 * s;
        }
        s = s_next;
        if step.abs() <= 3e-13 * s {
            // One polishing step; beyond it the residual is evaluation
            // noise of ψ itself.
            let polish = s - (psi_of_s(s) - y) / psi_of_s_prime(s);
            if polish > 0.0 && polish.is_finite() {
                s = polish;
            }
            let p = s.tanh().min(ONE_MINUS_ULP);
            return Ok(PsiInverse { p, atanh_p: s });
        }
    }
    Err(Error::NoConvergence(MAX_ITER))
}

/// The unique p ∈ [0, 1) with ψ(p) = y.
///
/// Behaves as √(3y)/2 for y → 0. For y ≳ 37 the returned p is the largest
/// f64 below 1; use [`psi_inv_full`] where the tail matters.
pub fn psi_inv(y: f64) -> Result<f64> {
    Ok(psi_inv_full(y)?.p)
}

/// Coupling factor f±(x) = (1 ∓ e⁻ˣ)⁻¹ of the two-layer resonance
/// condition. f₊ > 1 > f₋ on (0, ∞), both → 1 as x → ∞; f₊ has a pole at
/// x = 0 while f₋(0) = 1/2.
pub fn f_pm(x: f64, sign: Sign) -> Result<f64> {
    match sign {
        Sign::Plus => {
            if !(x > 0.0) {
                return Err(Error::Domain(format!(
                    "f_pm: x = {x} must be > 0 for the + branch (pole at 0)"
                )));
            }
            Ok(-1.0 / (-x).exp_m1())
        }
        Sign::Minus => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!(
                    "f_pm: x = {x} must be >= 0 for the - branch"
                )));
            }
            Ok(1.0 / (1.0 + (-x).exp()))
        }
    }
}
