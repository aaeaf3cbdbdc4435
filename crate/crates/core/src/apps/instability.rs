use nalgebra::linalg::{Schur, SVD};
use nalgebra::DMatrix;

use crate::eigencurve::{sample_at, sample_curves};
use crate::hermpair::{HermitianMatrix, HermitianPair, Tolerances, C64};
use crate::search::{golden_min, linspace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StabilityOptions {
    /// Coarse grid over `[-||A||, ||A||]`.
    pub grid_points: usize,
    /// Golden-section stopping width, relative to `1 + ||A||`.
    pub refine_tol: f64,
    pub max_iter: usize,
}

impl Default for StabilityOptions {
    fn default() -> Self {
        Self { grid_points: 4001, refine_tol: 1e-12, max_iter: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StabilityResult {
    /// Distance to instability `min over mu of sigma_min(Ahat - i mu I)`.
    pub beta: f64,
    pub mu_opt: f64,
    /// `sigma_min(Ahat - i mu_opt I)` from an SVD.
    pub certificate: f64,
    /// Refined local minima `(mu, lambda_m(mu))`, sorted by `mu`.
    pub local_minima: Vec<(f64, f64)>,
    /// `||A||` of the augmented pair; `|mu_opt| <= norm_a`.
    pub norm_a: f64,
}

fn check_square(ahat: &DMatrix<C64>) -> Result<usize> {
    let (rows, cols) = ahat.shape();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Err(Error::Empty);
    }
    for j in 0..cols {
        for i in 0..rows {
            let z = ahat[(i, j)];
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFiniteEntry { row: i, col: j });
            }
        }
    }
    Ok(rows)
}

/// Largest real part of the eigenvalues of `ahat`, from a complex Schur form.
pub fn spectral_abscissa(ahat: &DMatrix<C64>) -> Result<f64> {
    let m = check_square(ahat)?;
    let schur = Schur::try_new(ahat.clone(), f64::EPSILON, 1000 * m).ok_or(Error::EigSolverFailure)?;
    let ev = schur.eigenvalues().ok_or(Error::EigSolverFailure)?;
    Ok(ev.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max))
}

/// Smallest singular value.
pub fn sigma_min(m: &DMatrix<C64>) -> Result<f64> {
    let svd = SVD::try_new(m.clone(), false, false, f64::EPSILON, 1000 * m.nrows().max(1)).ok_or(Error::EigSolverFailure)?;
    Ok(svd.singular_values.iter().copied().fold(f64::INFINITY, f64::min))
}

/// `A = [[0, Ahat], [Ahat^H, 0]]`, `C = [[0, iI], [-iI, 0]]`, so that the
/// `m`-th largest eigenvalue of `A - mu C` is `sigma_min(Ahat - i mu I)`.
pub fn augmented_pair(ahat: &DMatrix<C64>, tol: Tolerances) -> Result<HermitianPair> {
    let m = check_square(ahat)?;
    let mut a = DMatrix::zeros(2 * m, 2 * m);
    let mut c = DMatrix::zeros(2 * m, 2 * m);
    a.view_mut((0, m), (m, m)).copy_from(ahat);
    a.view_mut((m, 0), (m, m)).copy_from(&ahat.adjoint());
    for i in 0..m {
        c[(i, m + i)] = C64::new(0.0, 1.0);
        c[(m + i, i)] = C64::new(0.0, -1.0);
    }
    HermitianPair::new(HermitianMatrix::symmetrized(&a), HermitianMatrix::symmetrized(&c), tol)
}

/// Distance to instability of a stable matrix.
///
/// Samples `lambda_m` on a grid over `[-||A||, ||A||]`, refines every
/// discrete local minimum by golden-section search and keeps the smallest.
/// The result is certified against an SVD of `Ahat - i mu_opt I`.
pub fn distance_to_instability(ahat: &DMatrix<C64>, tol: &Tolerances, opts: &StabilityOptions) -> Result<StabilityResult> {
    if opts.grid_points < 3 || opts.refine_tol.is_nan() || opts.refine_tol <= 0.0 || opts.max_iter == 0 {
        return Err(Error::InvalidOption(format!("invalid stability options {opts:?}")));
    }
    let m = check_square(ahat)?;
    let abscissa = spectral_abscissa(ahat)?;
    if abscissa >= -tol.zero_tol {
        return Err(Error::NotStable { max_real: abscissa, margin: tol.zero_tol });
    }
    let pair = augmented_pair(ahat, *tol)?;
    let norm = pair.norm_a();
    let idx = m - 1;
    let grid = linspace(-norm, norm, opts.grid_points);
    let vals: Vec<f64> = sample_curves(&pair, &grid)?.into_iter().map(|s| s.lambdas[idx]).collect();

    let lm = |mu: f64| sample_at(&pair, mu).map(|(s, _)| s.lambdas[idx]);
    let last = grid.len() - 1;
    let mut minima = Vec::new();
    for j in 0..=last {
        let left = j == 0 || vals[j] < vals[j - 1];
        let right = j == last || vals[j] <= vals[j + 1];
        if left && right {
            let (a, b) = (grid[j.saturating_sub(1)], grid[(j + 1).min(last)]);
            let r = golden_min(lm, a, b, opts.refine_tol * (1.0 + norm), opts.max_iter)?;
            let (x, fx) = if vals[j] < r.fx { (grid[j], vals[j]) } else { (r.x, r.fx) };
            minima.push((x, fx));
        }
    }
    let &(mu_opt, beta) = minima.iter().min_by(|p, q| p.1.total_cmp(&q.1)).ok_or(Error::EmptyGrid)?;
    let shifted = ahat - DMatrix::<C64>::identity(m, m) * C64::new(0.0, mu_opt);
    let certificate = sigma_min(&shifted)?;
    let ahat_norm = SVD::try_new(ahat.clone(), false, false, f64::EPSILON, 1000 * m).ok_or(Error::EigSolverFailure)?.singular_values.max();
    if (beta - certificate).abs() > tol.cert_tol * (1.0 + ahat_norm) {
        return Err(Error::CertificationFailed { mu: mu_opt, residual: (beta - certificate).abs() });
    }
    Ok(StabilityResult { beta, mu_opt, certificate, local_minima: minima, norm_a: norm })
}
