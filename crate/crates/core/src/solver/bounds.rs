use super::extremal::{maximize_bottom_curve, minimize_top_curve};
use super::SolveOptions;
use crate::eigencurve::{asymptotic_models, sample_at, AsymptoticModel};
use crate::hermpair::HermitianPair;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MuBoundSource {
    /// `||A|| / sqrt(-c_neg * c_pos)` with `c_neg`, `c_pos` the eigenvalues of
    /// `C` closest to zero on either side. Requires nonsingular `C`.
    NormRatio,
    /// Interval outside which every sloped eigencurve follows its asymptote
    /// monotonically. Heuristic; used when `C` is singular.
    AsymptoteBracket,
    /// Taken from `SolveOptions::mu_box`.
    User,
}

/// Every 2D-eigenvalue has `|mu| <= bound` (proven for `NormRatio`).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MuBound {
    pub bound: f64,
    pub source: MuBoundSource,
}

/// `max lambda_n <= lambda <= min lambda_1` for every 2D-eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LambdaBounds {
    pub lower: f64,
    pub upper: f64,
    /// Minimizer of `lambda_1`.
    pub mu_up: f64,
    /// Maximizer of `lambda_n`.
    pub mu_lo: f64,
}

pub fn mu_bound(pair: &HermitianPair) -> Result<MuBound> {
    match pair.c_inner_eigenvalues() {
        Some((pos, neg)) => Ok(MuBound { bound: pair.norm_a() / (-neg * pos).sqrt(), source: MuBoundSource::NormRatio }),
        None => Ok(MuBound { bound: asymptote_bracket(pair)?, source: MuBoundSource::AsymptoteBracket }),
    }
}

/// Slopes of the asymptotic branches matched to sorted curve order at `mu`.
fn sorted_slopes(model: &AsymptoticModel, mu: f64) -> Vec<f64> {
    let mut b = model.branches.clone();
    b.sort_by(|p, q| q.at(mu).total_cmp(&p.at(mu)));
    b.iter().map(|x| x.slope).collect()
}

fn follows_asymptotes(pair: &HermitianPair, model: &AsymptoticModel, mu: f64) -> Result<bool> {
    let (s, _) = sample_at(pair, mu)?;
    let flat = pair.tolerances().indef_tol;
    Ok(sorted_slopes(model, mu).iter().enumerate().all(|(i, &slope)| {
        if slope.abs() <= flat || !s.reliable[i] {
            return true;
        }
        let d = s.slope(i);
        d * slope > 0.0 && d.abs() >= 0.5 * slope.abs()
    }))
}

/// Doubles `r` until the sloped curves at `+r` and `-r` have the sign and
/// at least half the magnitude of their asymptotic slopes, then adds a factor 2.
fn asymptote_bracket(pair: &HermitianPair) -> Result<f64> {
    let (plus, minus) = asymptotic_models(pair)?;
    let mut r = ((1.0 + pair.norm_a()) / pair.norm_c()).max(1.0);
    for _ in 0..60 {
        if follows_asymptotes(pair, &plus, r)? && follows_asymptotes(pair, &minus, -r)? {
            break;
        }
        r *= 2.0;
    }
    Ok(2.0 * r)
}

/// The mu-interval searched by the solvers and the bound it came from.
///
/// Proven bounds are widened by 1% plus a small absolute margin so that
/// extrema sitting on the bound are bracketed.
pub(crate) fn search_box(pair: &HermitianPair, opts: &SolveOptions) -> Result<(MuBound, (f64, f64))> {
    if let Some((lo, hi)) = opts.mu_box {
        return Ok((MuBound { bound: lo.abs().max(hi.abs()), source: MuBoundSource::User }, (lo, hi)));
    }
    let b = mu_bound(pair)?;
    let w = 1.01 * b.bound + 1e-6 * (1.0 + b.bound);
    Ok((b, (-w, w)))
}

pub fn lambda_bounds(pair: &HermitianPair, opts: &SolveOptions) -> Result<LambdaBounds> {
    let top = minimize_top_curve(pair, opts)?;
    let bot = maximize_bottom_curve(pair, opts)?;
    Ok(LambdaBounds { lower: bot.lambda, upper: top.lambda, mu_up: top.mu, mu_lo: bot.mu })
}
