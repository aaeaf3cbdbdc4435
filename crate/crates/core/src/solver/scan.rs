use super::bounds::search_box;
use super::extremal::{best_triple_at, locate_slope_change};
use super::SolveOptions;
use crate::eigencurve::{sample_at, sample_curves, CurveSample};
use crate::hermpair::{HermitianPair, TwoDEigentriple};
use crate::search::{golden_min, linspace};
use crate::Result;

/// Certified triples plus candidates that came close but failed certification.
#[derive(Debug, Clone, Default)]
pub struct ScanOutcome {
    pub triples: Vec<TwoDEigentriple>,
    pub near_misses: Vec<TwoDEigentriple>,
}

/// Candidate location: a `mu` and the sorted curve it belongs to.
#[derive(Debug, Clone, Copy)]
enum Candidate {
    At(f64, usize),
    SlopeFlip { lo: f64, hi: f64, index: usize },
    Touch { lo: f64, hi: f64, index: usize },
    Crossing { lo: f64, hi: f64, index: usize },
}

/// Resolution-limited search for 2D-eigenvalues on every sorted curve.
///
/// Three kinds of candidates are harvested from a uniform grid over the
/// mu-box and refined before certification:
///
/// - sign changes of `g_i`, refined by bisection on the sign of the right
///   derivative (critical points and kinks with opposite one-sided slopes);
/// - strict local minima of `|g_i|` without a sign change, refined by
///   golden-section search (zeros where the curve flattens without turning);
/// - local minima of the gap `lambda_i - lambda_{i+1}`, refined by
///   golden-section search, then lifted through the cluster if `C_k` is
///   not definite.
///
/// Roots closer together than the grid spacing can be missed.
pub fn scan_interior(pair: &HermitianPair, opts: &SolveOptions) -> Result<Vec<TwoDEigentriple>> {
    Ok(scan(pair, opts, &[])?.triples)
}

/// Interior scan that ignores curve samples within the cluster tolerance of
/// any level in `skip_levels`.
pub(crate) fn scan(pair: &HermitianPair, opts: &SolveOptions, skip_levels: &[f64]) -> Result<ScanOutcome> {
    opts.validate()?;
    let (_, (lo, hi)) = search_box(pair, opts)?;
    let grid = linspace(lo, hi, opts.grid_points);
    let samples = sample_curves(pair, &grid)?;
    let h = grid[1] - grid[0];
    let skip = |s: &CurveSample, i: usize| skip_levels.iter().any(|&l| (s.lambdas[i] - l).abs() <= pair.cluster_tol());

    let mut cands = Vec::new();
    let zero = pair.tolerances().zero_tol;
    let noise = 1e3 * f64::EPSILON * (1.0 + pair.norm_c());
    let near_gap = 4.0 * h * pair.norm_c() + pair.cluster_tol();
    for i in 0..pair.n() {
        for j in 0..samples.len() {
            let s = &samples[j];
            if skip(s, i) {
                continue;
            }
            let g = s.gvals[i];
            if g.abs() <= zero {
                cands.push(Candidate::At(s.mu, i));
            }
            if j + 1 < samples.len() && !skip(&samples[j + 1], i) {
                let g1 = samples[j + 1].gvals[i];
                if g.abs() > zero && g1.abs() > zero && (g > 0.0) != (g1 > 0.0) {
                    cands.push(Candidate::SlopeFlip { lo: s.mu, hi: samples[j + 1].mu, index: i });
                }
            }
            if j == 0 || j + 1 == samples.len() || skip(&samples[j - 1], i) || skip(&samples[j + 1], i) {
                continue;
            }
            let (gp, gn) = (samples[j - 1].gvals[i], samples[j + 1].gvals[i]);
            let same_sign = (gp > 0.0) == (g > 0.0) && (g > 0.0) == (gn > 0.0);
            if same_sign && g.abs() > zero && gp.abs() - g.abs() > noise && gn.abs() - g.abs() > noise {
                cands.push(Candidate::Touch { lo: samples[j - 1].mu, hi: samples[j + 1].mu, index: i });
            }
            if i + 1 < pair.n() && !skip(s, i + 1) {
                let gap = |t: &CurveSample| t.lambdas[i] - t.lambdas[i + 1];
                let (dp, d, dn) = (gap(&samples[j - 1]), gap(s), gap(&samples[j + 1]));
                if d <= near_gap && d < dp && d <= dn {
                    cands.push(Candidate::Crossing { lo: samples[j - 1].mu, hi: samples[j + 1].mu, index: i });
                }
            }
        }
    }

    let mut out = ScanOutcome::default();
    for c in cands {
        let (mu, index) = match c {
            Candidate::At(mu, i) => (mu, i),
            Candidate::SlopeFlip { lo, hi, index } => match locate_slope_change(pair, index, 1.0, lo, hi, opts) {
                Ok(mu) => (mu, index),
                // g_i and the right derivative disagree inside a cluster
                Err(_) => continue,
            },
            Candidate::Touch { lo, hi, index } => {
                let f = |mu: f64| sample_at(pair, mu).map(|(s, _)| s.gvals[index].abs());
                (golden_min(f, lo, hi, opts.refine_tol * 1e-3, opts.max_bisect)?.x, index)
            }
            Candidate::Crossing { lo, hi, index } => {
                let f = |mu: f64| sample_at(pair, mu).map(|(s, _)| s.lambdas[index] - s.lambdas[index + 1]);
                let r = golden_min(f, lo, hi, opts.refine_tol * 1e-3, opts.max_bisect)?;
                if r.fx > pair.cluster_tol() {
                    continue;
                }
                (r.x, index)
            }
        };
        let t = best_triple_at(pair, mu, index)?;
        if skip_levels.iter().any(|&l| (t.lambda - l).abs() <= pair.cluster_tol()) {
            continue;
        }
        if t.certified {
            out.triples.push(t);
        } else if t.residuals.max() <= pair.tolerances().cert_tol.sqrt() {
            out.near_misses.push(t);
        }
    }
    Ok(out)
}
