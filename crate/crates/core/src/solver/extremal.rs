use nalgebra::DVector;

use super::bounds::search_box;
use super::SolveOptions;
use crate::eigencurve::{cluster_from_decomposition, one_sided_derivatives, sample_at, DegenerateCluster};
use crate::hermpair::{eigh_desc, HermitianPair, Tolerances, TwoDEigentriple, C64};
use crate::search::bisect_predicate;
use crate::{Error, Result};

/// A unit vector `x = X_k z` with `z^H C_k z = 0`.
///
/// Uses a null vector of `C_k` when one exists (eigenvalue within `zero_tol`
/// relative to `C_k`), otherwise mixes eigenvectors `u+`, `u-` of eigenvalues
/// `a > 0 > b` as `sqrt(-b) u+ + sqrt(a) u-`.
pub fn construct_isotropic_vector(cluster: &DegenerateCluster, tol: &Tolerances) -> Result<DVector<C64>> {
    let d = eigh_desc(&cluster.projected)?;
    let k = d.n();
    let thresh = tol.zero_tol * (1.0 + d.spectral_radius());
    let nearest = (0..k).min_by(|&i, &j| d.eigenvalues[i].abs().total_cmp(&d.eigenvalues[j].abs())).unwrap();
    let z = if d.eigenvalues[nearest].abs() <= thresh {
        d.vector(nearest)
    } else {
        let (a, b) = (d.eigenvalues[0], d.eigenvalues[k - 1]);
        if !(a > 0.0 && b < 0.0) {
            return Err(Error::DefiniteProjection);
        }
        d.vector(0) * C64::new((-b).sqrt(), 0.0) + d.vector(k - 1) * C64::new(a.sqrt(), 0.0)
    };
    let x = &cluster.basis * z;
    let nrm = x.norm();
    Ok(x.unscale(nrm))
}

/// Cluster gap at the level of eigensolver rounding.
pub(crate) fn roundoff_gap(pair: &HermitianPair, mu: f64) -> f64 {
    1e3 * f64::EPSILON * (1.0 + pair.norm_a() + mu.abs() * pair.norm_c())
}

/// Right derivative of sorted curve `index` at `mu`.
///
/// Eigenvalues that agree to rounding are treated as one cluster so that a
/// persistent multiplicity does not make the answer depend on the eigenvector basis.
pub(crate) fn right_derivative(pair: &HermitianPair, mu: f64, index: usize) -> Result<f64> {
    let (_, d) = sample_at(pair, mu)?;
    let cl = cluster_from_decomposition(pair, mu, &d, index, roundoff_gap(pair, mu));
    Ok(one_sided_derivatives(&cl)?.right[index - cl.first_index])
}

/// Best-residual triple for curve `index` at `mu`.
///
/// Tries the plain eigenvector and isotropic vectors of the clusters formed at
/// the rounding gap and at the cluster tolerance.
pub(crate) fn best_triple_at(pair: &HermitianPair, mu: f64, index: usize) -> Result<TwoDEigentriple> {
    let (_, d) = sample_at(pair, mu)?;
    let tol = pair.tolerances();
    let mut best = TwoDEigentriple::from_vector(pair, mu, &d.vector(index))?;
    let mut last_k = 1;
    for gap in [roundoff_gap(pair, mu), pair.cluster_tol()] {
        let cl = cluster_from_decomposition(pair, mu, &d, index, gap);
        if cl.k() == last_k {
            continue;
        }
        last_k = cl.k();
        let Ok(x) = construct_isotropic_vector(&cl, tol) else { continue };
        let t = TwoDEigentriple::from_vector(pair, mu, &x)?;
        if t.residuals.max() < best.residuals.max() {
            best = t;
        }
    }
    Ok(best)
}

/// Where the sign of the right derivative of `sign * lambda_index` flips
/// between `lo` and `hi`. The flip must exist: `pred(lo) != pred(hi)`.
pub(crate) fn locate_slope_change(pair: &HermitianPair, index: usize, sign: f64, lo: f64, hi: f64, opts: &SolveOptions) -> Result<f64> {
    let pred = |mu: f64| right_derivative(pair, mu, index).map(|r| sign * r > 0.0);
    let up = pred(hi)?;
    if pred(lo)? == up {
        return Err(Error::BracketFailure { lo, hi });
    }
    let (a, b) = if up { (lo, hi) } else { (hi, lo) };
    bisect_predicate(pred, a, b, 0.0, opts.max_bisect)
}

/// Minimizer of the convex function `sign * lambda_index` where `index` is the
/// top curve for `sign = 1` and the bottom curve for `sign = -1`.
fn extremal(pair: &HermitianPair, opts: &SolveOptions, index: usize, sign: f64) -> Result<TwoDEigentriple> {
    opts.validate()?;
    let (_, (mut lo, mut hi)) = search_box(pair, opts)?;
    let pred = |mu: f64| right_derivative(pair, mu, index).map(|r| sign * r > 0.0);
    // the box should already contain the minimizer; widen if rounding says otherwise
    let mut grow = 0;
    while pred(lo)? {
        if grow == 60 {
            return Err(Error::BracketFailure { lo, hi });
        }
        lo -= (hi - lo).max(1.0);
        grow += 1;
    }
    while !pred(hi)? {
        if grow == 120 {
            return Err(Error::BracketFailure { lo, hi });
        }
        hi += (hi - lo).max(1.0);
        grow += 1;
    }
    let mu = bisect_predicate(pred, lo, hi, 0.0, opts.max_bisect)?;
    let t = best_triple_at(pair, mu, index)?;
    if !t.certified {
        return Err(Error::CertificationFailed { mu, residual: t.residuals.max() });
    }
    Ok(t)
}

/// Global minimum of the convex top curve `lambda_1`: the largest 2D-eigenvalue.
///
/// Equals the maximum of `x^H A x` over unit `x` with `x^H C x = 0`.
pub fn minimize_top_curve(pair: &HermitianPair, opts: &SolveOptions) -> Result<TwoDEigentriple> {
    extremal(pair, opts, 0, 1.0)
}

/// Global maximum of the concave bottom curve `lambda_n`: the smallest 2D-eigenvalue.
pub fn maximize_bottom_curve(pair: &HermitianPair, opts: &SolveOptions) -> Result<TwoDEigentriple> {
    extremal(pair, opts, pair.n() - 1, -1.0)
}
