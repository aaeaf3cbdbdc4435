//! Scalar search helpers shared by the solvers.

use crate::Result;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of `f` on `[a, b]`.
///
/// Stops when the bracket is narrower than `tol` or after `max_iter`
/// reductions. Returns the final bracket and the best point seen.
pub(crate) fn golden_min<F>(mut f: F, mut a: f64, mut b: f64, tol: f64, max_iter: usize) -> Result<GoldenResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut iter = 0;
    while (b - a) > tol && iter < max_iter {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
        iter += 1;
        if !(x1 > a && x2 < b && x1 <= x2) {
            break;
        }
    }
    let (x, fx) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    Ok(GoldenResult { x, fx })
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct GoldenResult {
    pub x: f64,
    pub fx: f64,
}

/// Bisection on a predicate that is `false` at `lo` and `true` at `hi`.
///
/// Returns the midpoint of the final bracket. Stops on `tol`, `max_iter`, or
/// when the midpoint is no longer representable between the ends.
pub(crate) fn bisect_predicate<F>(mut pred: F, mut lo: f64, mut hi: f64, tol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> Result<bool>,
{
    for _ in 0..max_iter {
        if (hi - lo).abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        if pred(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Uniform grid with exact endpoints.
pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n).map(|j| if j == n - 1 { hi } else { lo + (hi - lo) * (j as f64) / ((n - 1) as f64) }).collect(),
    }
}
