use crate::error::{Error, Result};

/// Root of a continuous, strictly monotone function on a bracket.
///
/// Bisection until the bracket width drops below `tol` (position is then
/// refined by one secant step inside the final bracket). Requires
/// `g(lo) * g(hi) <= 0`; returns `BracketInvalid` otherwise.
pub fn find_root_monotone<F: FnMut(f64) -> f64>(
    mut g: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::BracketInvalid { lo, hi });
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = g(a);
    let mut fb = g(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(Error::BracketInvalid { lo, hi });
    }

    const MAX_ITER: usize = 2000;
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (a + b);
        if (b - a) <= tol.max(0.0) || mid <= a || mid >= b {
            // Secant polish inside the final bracket.
            let sec = a - fa * (b - a) / (fb - fa);
            return Ok(if sec.is_finite() && sec > a && sec < b {
                sec
            } else {
                mid
            });
        }
        let fm = g(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    Err(Error::NoConvergence(MAX_ITER))
}
