//! Sorted eigencurves of `A - mu C` and their local structure.
//!
//! The eigenvalues `lambda_1(mu) >= ... >= lambda_n(mu)` form continuous
//! curves that may kink where they cross. On a stretch where `lambda_i` is
//! simple, `lambda_i'(mu) = -x_i^H C x_i`. At a multiple eigenvalue the
//! one-sided derivatives of the curves meeting there are the eigenvalues of
//! `-X_k^H C X_k`, with `X_k` an orthonormal basis of the eigenspace. The
//! analytic reordering of the curves is never built; everything downstream
//! works from these local derivative multisets.

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::hermpair::{eigh_desc, HermitianMatrix, HermitianPair, SpectralDecomposition, Tolerances, C64};
use crate::{Error, Result};

/// Sorted eigenvalues of `A - mu C` at one `mu`, with `g_i = x_i^H C x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub mu: f64,
    /// Non-increasing.
    pub lambdas: Vec<f64>,
    pub gvals: Vec<f64>,
    /// `false` where `lambda_i` is within the cluster tolerance of a neighbour;
    /// `gvals[i]` is then eigenvector-dependent and not a derivative.
    pub reliable: Vec<bool>,
}

impl CurveSample {
    pub(crate) fn from_decomposition(pair: &HermitianPair, mu: f64, d: &SpectralDecomposition) -> Self {
        let n = d.n();
        let c = pair.c().as_matrix();
        let cv = c * &d.eigenvectors;
        let gvals = (0..n).map(|i| d.eigenvectors.column(i).dotc(&cv.column(i)).re).collect();
        let gap = pair.cluster_tol();
        let reliable = (0..n)
            .map(|i| {
                let above = i == 0 || d.eigenvalues[i - 1] - d.eigenvalues[i] > gap;
                let below = i + 1 == n || d.eigenvalues[i] - d.eigenvalues[i + 1] > gap;
                above && below
            })
            .collect();
        Self { mu, lambdas: d.eigenvalues.clone(), gvals, reliable }
    }

    /// Derivative `lambda_i'(mu) = -g_i`, valid where `reliable[i]`.
    pub fn slope(&self, i: usize) -> f64 {
        -self.gvals[i]
    }
}

/// Eigendecomposition of `A - mu C` together with its curve sample.
pub fn sample_at(pair: &HermitianPair, mu: f64) -> Result<(CurveSample, SpectralDecomposition)> {
    if !mu.is_finite() {
        return Err(Error::NonFiniteParameter(mu));
    }
    let d = eigh_desc(&pair.pencil(mu))?;
    Ok((CurveSample::from_decomposition(pair, mu, &d), d))
}

/// Samples every sorted eigencurve on `grid`. Grid points are evaluated
/// independently (in parallel) and returned in grid order.
pub fn sample_curves(pair: &HermitianPair, grid: &[f64]) -> Result<Vec<CurveSample>> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if grid.iter().any(|m| !m.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid);
    }
    grid.par_iter().map(|&mu| sample_at(pair, mu).map(|(s, _)| s)).collect()
}

/// A (possibly simple) eigenvalue of `A - mu0 C` together with its eigenspace.
#[derive(Debug, Clone)]
pub struct DegenerateCluster {
    pub mu0: f64,
    /// Mean of the clustered eigenvalues.
    pub lambda0: f64,
    /// Zero-based position of the cluster's top eigenvalue among the sorted eigenvalues.
    pub first_index: usize,
    /// `n x k`, orthonormal columns.
    pub basis: DMatrix<C64>,
    /// `C_k = X_k^H C X_k`, `k x k` Hermitian.
    pub projected: HermitianMatrix,
    /// The clustered eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
}

impl DegenerateCluster {
    pub fn k(&self) -> usize {
        self.basis.ncols()
    }

    /// Zero-based indices of the sorted curves meeting in this cluster.
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.first_index..self.first_index + self.k()
    }

    /// Spread of the clustered eigenvalues.
    pub fn spread(&self) -> f64 {
        self.eigenvalues[0] - self.eigenvalues[self.k() - 1]
    }
}

/// Grows a cluster around sorted index `index` while consecutive gaps are at most `gap`.
pub(crate) fn cluster_from_decomposition(
    pair: &HermitianPair,
    mu0: f64,
    d: &SpectralDecomposition,
    index: usize,
    gap: f64,
) -> DegenerateCluster {
    let n = d.n();
    let mut lo = index;
    while lo > 0 && d.eigenvalues[lo - 1] - d.eigenvalues[lo] <= gap {
        lo -= 1;
    }
    let mut hi = index;
    while hi + 1 < n && d.eigenvalues[hi] - d.eigenvalues[hi + 1] <= gap {
        hi += 1;
    }
    let basis = d.eigenvectors.columns(lo, hi - lo + 1).into_owned();
    let projected = pair.c().congruence(&basis);
    let eigenvalues = d.eigenvalues[lo..=hi].to_vec();
    let lambda0 = eigenvalues.iter().sum::<f64>() / eigenvalues.len() as f64;
    DegenerateCluster { mu0, lambda0, first_index: lo, basis, projected, eigenvalues }
}

/// Cluster of eigenvalues of `A - mu0 C` around `lambda0`.
pub fn cluster_at(pair: &HermitianPair, mu0: f64, lambda0: f64, tol: &Tolerances) -> Result<DegenerateCluster> {
    let (_, d) = sample_at(pair, mu0)?;
    let gap = tol.cluster_abs(pair.norm_a());
    let nearest = (0..d.n()).min_by(|&i, &j| (d.eigenvalues[i] - lambda0).abs().total_cmp(&(d.eigenvalues[j] - lambda0).abs())).unwrap();
    if (d.eigenvalues[nearest] - lambda0).abs() > gap {
        return Err(Error::NoEigenvalueNearby { mu: mu0, lambda: lambda0, tol: gap });
    }
    Ok(cluster_from_decomposition(pair, mu0, &d, nearest, gap))
}

/// One-sided derivatives of the sorted curves in a cluster, listed in curve
/// order (top curve first).
///
/// Both lists hold the eigenvalues of `-C_k`. Going right the top curve takes
/// the largest slope, so `right` is non-increasing; going left it takes the
/// smallest, so `left` is non-decreasing. This keeps the curves sorted on
/// both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct OneSidedDerivatives {
    pub right: Vec<f64>,
    pub left: Vec<f64>,
}

pub fn one_sided_derivatives(cluster: &DegenerateCluster) -> Result<OneSidedDerivatives> {
    let ck = eigh_desc(&cluster.projected)?;
    // eig(-C_k) descending is -eig(C_k) ascending
    let right: Vec<f64> = ck.eigenvalues.iter().rev().map(|v| -v).collect();
    let left: Vec<f64> = right.iter().rev().copied().collect();
    Ok(OneSidedDerivatives { right, left })
}

/// `(left, right)` derivative of sorted curve `index` at `mu`.
pub fn curve_slopes(pair: &HermitianPair, mu: f64, index: usize) -> Result<(f64, f64)> {
    let (_, d) = sample_at(pair, mu)?;
    let cl = cluster_from_decomposition(pair, mu, &d, index, pair.cluster_tol());
    let der = one_sided_derivatives(&cl)?;
    let j = index - cl.first_index;
    Ok((der.left[j], der.right[j]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    PlusInfinity,
    MinusInfinity,
}

/// Straight-line asymptote `slope * mu + intercept` of one eigencurve.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AsymptoticBranch {
    pub slope: f64,
    pub intercept: f64,
}

impl AsymptoticBranch {
    pub fn at(&self, mu: f64) -> f64 {
        self.slope * mu + self.intercept
    }
}

/// Large-`|mu|` behaviour of the eigencurves in one direction.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticModel {
    pub direction: Direction,
    pub branches: Vec<AsymptoticBranch>,
}

impl AsymptoticModel {
    /// Branch values at `mu`, sorted descending.
    pub fn predict(&self, mu: f64) -> Vec<f64> {
        let mut v: Vec<f64> = self.branches.iter().map(|b| b.at(mu)).collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}

/// Asymptotes of the eigencurves as `mu -> +inf` and `mu -> -inf`.
///
/// For each distinct eigenvalue `c_i` of `C` with orthonormal eigenbasis
/// `Y_i`, the branches have slope `-c_i` and intercepts equal to the
/// eigenvalues of `Y_i^H A Y_i`.
pub fn asymptotic_models(pair: &HermitianPair) -> Result<(AsymptoticModel, AsymptoticModel)> {
    let dc = eigh_desc(pair.c())?;
    let gap = pair.tolerances().cluster_tol * (1.0 + pair.norm_c());
    let n = dc.n();
    let mut branches = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && dc.eigenvalues[end] - dc.eigenvalues[end + 1] <= gap {
            end += 1;
        }
        let k = end - start + 1;
        let y = dc.eigenvectors.columns(start, k).into_owned();
        let c_mean = dc.eigenvalues[start..=end].iter().sum::<f64>() / k as f64;
        let tau = eigh_desc(&pair.a().congruence(&y))?;
        for t in tau.eigenvalues {
            branches.push(AsymptoticBranch { slope: -c_mean, intercept: t });
        }
        start = end + 1;
    }
    Ok((
        AsymptoticModel { direction: Direction::PlusInfinity, branches: branches.clone() },
        AsymptoticModel { direction: Direction::MinusInfinity, branches },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermpair::{real_matrix, validate_pair};

    fn pair(a: &[&[f64]], c: &[&[f64]]) -> HermitianPair {
        validate_pair(&real_matrix(a), &real_matrix(c), Tolerances::default()).unwrap()
    }

    fn tilted_2x2(t: f64) -> HermitianPair {
        pair(&[&[1.0, t], &[t, 1.0]], &[&[0.2, 0.0], &[0.0, -0.5]])
    }

    fn inflection_3x3() -> HermitianPair {
        pair(&[&[2.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]], &[&[1.0, 0.0, 1.0], &[0.0, 1.0, 1.0], &[1.0, 1.0, 0.0]])
    }

    fn crossing_4x4() -> HermitianPair {
        pair(
            &[&[2.0, 0.0, 1.0, 0.0], &[0.0, 0.0, 1.0, 0.0], &[1.0, 1.0, 0.0, 0.0], &[0.0, 0.0, 0.0, 0.6]],
            &[&[1.0, 0.0, 1.0, 0.0], &[0.0, 1.0, 1.0, 0.0], &[1.0, 1.0, 0.0, 0.0], &[0.0, 0.0, 0.0, 0.6]],
        )
    }

    fn line_family_3x3() -> HermitianPair {
        pair(&[&[1.0, 2.0, 0.0], &[2.0, 1.0, 0.0], &[0.0, 0.0, 4.0]], &[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, -1.0]])
    }

    #[test]
    fn top_curve_at_closed_form_minimizer() {
        let s = sample_curves(&tilted_2x2(0.2), &[-0.27105237087157537]).unwrap();
        assert!((s[0].lambdas[0] - 1.1807015805810502).abs() < 1e-12);
        assert!(s[0].gvals[0].abs() < 1e-12);
    }

    #[test]
    fn horizontal_curve_of_line_family_3x3() {
        let p = line_family_3x3();
        let grid: Vec<f64> = (-20..=20).map(|k| k as f64 * 0.5 + 0.01).collect();
        for s in sample_curves(&p, &grid).unwrap() {
            assert!(s.lambdas.iter().any(|l| (l + 1.0).abs() < 1e-12), "mu = {}", s.mu);
        }
    }

    #[test]
    fn mu_zero_gives_spectrum_of_a() {
        let p = inflection_3x3();
        let s = sample_curves(&p, &[0.0]).unwrap();
        let d = eigh_desc(p.a()).unwrap();
        assert_eq!(s[0].lambdas, d.eigenvalues);
    }

    #[test]
    fn grid_errors() {
        let p = inflection_3x3();
        assert_eq!(sample_curves(&p, &[]), Err(Error::EmptyGrid));
        assert_eq!(sample_curves(&p, &[1.0, 0.0]), Err(Error::InvalidGrid));
        assert_eq!(sample_curves(&p, &[0.0, f64::NAN]), Err(Error::InvalidGrid));
    }

    #[test]
    fn crossing_4x4_crossing_has_multiplicity_two() {
        let p = crossing_4x4();
        let cl = cluster_at(&p, 1.0, 0.0, p.tolerances()).unwrap();
        assert_eq!(cl.k(), 2);
        assert_eq!(cl.indices(), 1..3);
        let der = one_sided_derivatives(&cl).unwrap();
        // C_k has eigenvalues {0.6, 0}
        assert!((der.right[0] - 0.0).abs() < 1e-12 && (der.right[1] + 0.6).abs() < 1e-12);
        assert!((der.left[0] + 0.6).abs() < 1e-12 && (der.left[1] - 0.0).abs() < 1e-12);
    }

    #[test]
    fn inflection_3x3_simple_cluster() {
        let p = inflection_3x3();
        let cl = cluster_at(&p, 1.0, 0.0, p.tolerances()).unwrap();
        assert_eq!(cl.k(), 1);
        assert_eq!(cl.first_index, 1);
        assert!(cl.projected[(0, 0)].norm() < 1e-14);
        let der = one_sided_derivatives(&cl).unwrap();
        assert!(der.right[0].abs() < 1e-14 && der.left[0].abs() < 1e-14);
    }

    #[test]
    fn simple_cluster_derivative_is_minus_g() {
        let p = inflection_3x3();
        let (s, _) = sample_at(&p, 0.37).unwrap();
        for i in 0..3 {
            let cl = cluster_at(&p, 0.37, s.lambdas[i], p.tolerances()).unwrap();
            assert_eq!(cl.k(), 1);
            let der = one_sided_derivatives(&cl).unwrap();
            assert!((der.right[0] + s.gvals[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn horizontal_branch_has_zero_derivative() {
        let p = line_family_3x3();
        for mu in [-3.0, 0.4, 7.5] {
            let cl = cluster_at(&p, mu, -1.0, p.tolerances()).unwrap();
            let der = one_sided_derivatives(&cl).unwrap();
            assert!(der.right.iter().any(|d| d.abs() < 1e-12));
        }
    }

    #[test]
    fn nothing_nearby() {
        let p = inflection_3x3();
        assert!(matches!(cluster_at(&p, 1.0, 0.5, p.tolerances()), Err(Error::NoEigenvalueNearby { .. })));
    }

    #[test]
    fn asymptotes_for_diagonal_c() {
        let (plus, minus) = asymptotic_models(&tilted_2x2(0.2)).unwrap();
        assert_eq!(plus.direction, Direction::PlusInfinity);
        assert_eq!(minus.direction, Direction::MinusInfinity);
        let mut slopes: Vec<f64> = plus.branches.iter().map(|b| b.slope).collect();
        slopes.sort_by(f64::total_cmp);
        assert!((slopes[0] + 0.2).abs() < 1e-15 && (slopes[1] - 0.5).abs() < 1e-15);
        for b in &plus.branches {
            assert!((b.intercept - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn asymptotes_for_repeated_c_eigenvalues() {
        // C = diag(1, 1, -1): the 2-dim eigenspace gives intercepts eig(A[0..2, 0..2])
        let p = pair(&[&[1.0, 2.0, 0.5], &[2.0, -1.0, 0.0], &[0.5, 0.0, 3.0]], &[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, -1.0]]);
        let (plus, _) = asymptotic_models(&p).unwrap();
        let mut got: Vec<(f64, f64)> = plus.branches.iter().map(|b| (b.slope, b.intercept)).collect();
        got.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let s5 = 5f64.sqrt();
        let want = [(-1.0, -s5), (-1.0, s5), (1.0, 3.0)];
        for (g, w) in got.iter().zip(want) {
            assert!((g.0 - w.0).abs() < 1e-14 && (g.1 - w.1).abs() < 1e-13, "{g:?} vs {w:?}");
        }
    }
}
