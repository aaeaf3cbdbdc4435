//! General 2D-eigenvalue computation.
//!
//! The largest and smallest 2D-eigenvalues are the minimum of the convex top
//! curve and the maximum of the concave bottom curve; both are found by
//! bisection on the sign of a one-sided derivative. Interior 2D-eigenvalues
//! are harvested by a grid scan and certified by residuals. Pairs for which
//! `(A - sigma I, C)` is singular for some `sigma` have a horizontal
//! eigencurve made entirely of 2D-eigenvalues; these are reported as line
//! families.

mod bounds;
mod extremal;
mod options;
mod regularity;
mod scan;

pub use bounds::{lambda_bounds, mu_bound, LambdaBounds, MuBound, MuBoundSource};
pub(crate) use extremal::{best_triple_at, right_derivative};
pub use extremal::{construct_isotropic_vector, maximize_bottom_curve, minimize_top_curve};
pub use options::SolveOptions;
pub use regularity::{common_spectrum, full_probe, regularity_probe, RegularityVerdict};
pub use scan::{scan_interior, ScanOutcome};

use crate::eigencurve::{cluster_from_decomposition, sample_at};
use crate::hermpair::{HermitianPair, TwoDEigentriple};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SolveReport {
    /// Certified, deduplicated, sorted by `mu`.
    pub triples: Vec<TwoDEigentriple>,
    pub mu_bound: MuBound,
    /// The interval that was scanned.
    pub mu_box: (f64, f64),
    pub lambda_bounds: LambdaBounds,
    pub regularity: RegularityVerdict,
    /// Levels `lambda0` of horizontal eigencurves; every `(mu, lambda0)` is a 2D-eigenvalue.
    pub line_families: Vec<f64>,
    /// Scan candidates that failed certification by a small margin.
    pub near_misses: Vec<TwoDEigentriple>,
}

impl SolveReport {
    pub fn is_empty(&self) -> bool {
        self.triples.is_empty() && self.line_families.is_empty()
    }
}

/// Whether two certified triples describe the same 2D-eigenvalue.
///
/// The mu-window is the larger of `10 refine_tol` and `sqrt(eps)` relative,
/// since golden-section refinement of a flat minimum cannot resolve `mu`
/// more finely than that.
fn same_eigenvalue(s: &TwoDEigentriple, t: &TwoDEigentriple, pair: &HermitianPair, opts: &SolveOptions) -> bool {
    let dmu = (10.0 * opts.refine_tol).max(f64::EPSILON.sqrt() * (1.0 + s.mu.abs()));
    let dl = 10.0 * pair.tolerances().cert_tol * (1.0 + pair.norm_a());
    (s.mu - t.mu).abs() <= dmu && (s.lambda - t.lambda).abs() <= dl
}

/// Sorts by `mu` and merges duplicates, keeping the smallest residual.
pub(crate) fn dedup(mut ts: Vec<TwoDEigentriple>, pair: &HermitianPair, opts: &SolveOptions) -> Vec<TwoDEigentriple> {
    ts.sort_by(|s, t| s.mu.total_cmp(&t.mu).then(s.lambda.total_cmp(&t.lambda)));
    let mut out: Vec<TwoDEigentriple> = Vec::with_capacity(ts.len());
    for t in ts {
        match out.iter_mut().rev().take_while(|o| t.mu - o.mu <= 1e-6 * (1.0 + t.mu.abs())).find(|o| same_eigenvalue(o, &t, pair, opts)) {
            Some(o) if t.residuals.max() < o.residuals.max() => *o = t,
            Some(_) => {}
            None => out.push(t),
        }
    }
    out.sort_by(|s, t| s.mu.total_cmp(&t.mu).then(s.lambda.total_cmp(&t.lambda)));
    out
}

/// The 2D-eigentriple at `(mu, level)` on a horizontal eigencurve.
///
/// Builds the cluster of `A - mu C` around `level` and lifts it to an
/// isotropic vector.
pub fn line_family_triple(pair: &HermitianPair, mu: f64, level: f64) -> Result<TwoDEigentriple> {
    let (_, d) = sample_at(pair, mu)?;
    let idx = (0..d.n()).min_by(|&i, &j| (d.eigenvalues[i] - level).abs().total_cmp(&(d.eigenvalues[j] - level).abs())).unwrap();
    let gap = pair.cluster_tol();
    if (d.eigenvalues[idx] - level).abs() > gap {
        return Err(Error::NoEigenvalueNearby { mu, lambda: level, tol: gap });
    }
    let cl = cluster_from_decomposition(pair, mu, &d, idx, gap);
    let x = construct_isotropic_vector(&cl, pair.tolerances())?;
    TwoDEigentriple::from_vector(pair, mu, &x)
}

/// All 2D-eigenvalues the scan can resolve, with bounds and diagnostics.
///
/// Completeness is limited by the grid resolution of the interior scan; the
/// two extremal 2D-eigenvalues are always included.
pub fn find_all(pair: &HermitianPair, opts: &SolveOptions) -> Result<SolveReport> {
    opts.validate()?;
    let regularity = regularity_probe(pair, opts)?;
    let (mu_bound, mu_box) = bounds::search_box(pair, opts)?;
    let top = minimize_top_curve(pair, opts)?;
    let bot = maximize_bottom_curve(pair, opts)?;
    let lambda_bounds = LambdaBounds { lower: bot.lambda, upper: top.lambda, mu_up: top.mu, mu_lo: bot.mu };
    let line_families = regularity.witness_lambda_lines.clone();
    let scanned = scan::scan(pair, opts, &line_families)?;

    let on_line = |t: &TwoDEigentriple| line_families.iter().any(|&l| (t.lambda - l).abs() <= pair.cluster_tol());
    let mut all: Vec<TwoDEigentriple> = [top, bot].into_iter().filter(|t| !on_line(t)).collect();
    all.extend(scanned.triples);
    let triples = dedup(all, pair, opts);
    let report = SolveReport {
        triples,
        mu_bound,
        mu_box,
        lambda_bounds,
        regularity,
        line_families,
        near_misses: dedup(scanned.near_misses, pair, opts),
    };
    Ok(report)
}
