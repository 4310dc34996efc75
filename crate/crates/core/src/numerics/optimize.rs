use crate::error::{Error, Result};

/// Maximum of a unimodal function on `[lo, hi]` by golden-section search.
///
/// Returns `(x_max, f_max)` with `|x_max - argmax| <= tol`. Derivative-free
/// and deterministic.
pub fn maximize_1d<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() || !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "maximize_1d needs finite lo < hi and tol > 0 (got [{lo}, {hi}], tol {tol})"
        )));
    }
    // 2 - φ, the golden-section step ratio.
    const RESP: f64 = 0.381_966_011_250_105_1;
    const MAX_ITER: usize = 500;

    let mut a = lo;
    let mut b = hi;
    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    for _ in 0..MAX_ITER {
        if (b - a) <= tol {
            return Ok(if f1 > f2 { (x1, f1) } else { (x2, f2) });
        }
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2);
        }
    }
    Err(Error::NoConvergence(MAX_ITER))
}
