use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bounds::search_box;
use super::SolveOptions;
use crate::eigencurve::sample_at;
use crate::hermpair::HermitianPair;
use crate::Result;

/// Whether `(A - sigma I, C)` is a regular pair for every real `sigma`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// First level `sigma0` at which `(A - sigma0 I, C)` is singular.
    pub witness_sigma: Option<f64>,
    /// Every such level found; each is a horizontal eigencurve.
    pub witness_lambda_lines: Vec<f64>,
    /// Decided from nonsingular `C` alone.
    pub fast_path: bool,
}

/// Eigenvalues shared by `A - mu_j C` for every `mu_j`, within the cluster
/// tolerance scaled to each pencil.
///
/// `det(A - sigma I - mu C)` has degree at most `n` in `mu`, so a `sigma`
/// shared by `n + 1` distinct `mu_j` makes it vanish identically.
pub fn common_spectrum(pair: &HermitianPair, mus: &[f64]) -> Result<Vec<f64>> {
    let Some((&first, rest)) = mus.split_first() else { return Ok(Vec::new()) };
    let tol = pair.tolerances().cluster_tol;
    let spectra = rest.iter().map(|&m| sample_at(pair, m).map(|(s, _)| (m, s.lambdas))).collect::<Result<Vec<_>>>()?;
    let (s0, _) = sample_at(pair, first)?;
    let mut out: Vec<f64> = Vec::new();
    for &sigma in &s0.lambdas {
        let mut hits = vec![sigma];
        for (m, lams) in &spectra {
            let gap = tol * (1.0 + pair.norm_a() + m.abs() * pair.norm_c());
            match lams.iter().copied().min_by(|a, b| (a - sigma).abs().total_cmp(&(b - sigma).abs())) {
                Some(l) if (l - sigma).abs() <= gap => hits.push(l),
                _ => break,
            }
        }
        if hits.len() == mus.len() {
            let level = hits.iter().sum::<f64>() / hits.len() as f64;
            let dup = out.iter().any(|&o| (o - level).abs() <= tol * (1.0 + pair.norm_a()));
            if !dup {
                out.push(level);
            }
        }
    }
    Ok(out)
}

/// Regularity test. Nonsingular `C` is regular outright; otherwise the
/// spectra at `n + 1` seeded random points of the mu-box are intersected.
pub fn regularity_probe(pair: &HermitianPair, opts: &SolveOptions) -> Result<RegularityVerdict> {
    if !pair.c_is_singular() {
        return Ok(RegularityVerdict { regular: true, witness_sigma: None, witness_lambda_lines: Vec::new(), fast_path: true });
    }
    full_probe(pair, opts)
}

/// The intersection test without the nonsingular-`C` shortcut.
pub fn full_probe(pair: &HermitianPair, opts: &SolveOptions) -> Result<RegularityVerdict> {
    opts.validate()?;
    let (_, (lo, hi)) = search_box(pair, opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut mus: Vec<f64> = Vec::with_capacity(pair.n() + 1);
    while mus.len() < pair.n() + 1 {
        let m = rng.random_range(lo..hi);
        if mus.iter().all(|&x| (x - m).abs() > 1e-3 * (hi - lo)) {
            mus.push(m);
        }
    }
    let lines = common_spectrum(pair, &mus)?;
    Ok(RegularityVerdict {
        regular: lines.is_empty(),
        witness_sigma: lines.first().copied(),
        witness_lambda_lines: lines,
        fast_path: false,
    })
}
