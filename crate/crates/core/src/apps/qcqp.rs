use nalgebra::{DMatrix, DVector};

use crate::eigencurve::{cluster_from_decomposition, sample_at};
use crate::hermpair::{eigh_desc, rayleigh, HermitianMatrix, HermitianPair, Tolerances, C64};
use crate::search::bisect_predicate;
use crate::solver::{best_triple_at, right_derivative, SolveOptions};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimaxCase {
    /// A minimal eigenvector of `A` already has `rho_B <= lambda_min(A)`.
    CaseA,
    /// The same with the roles of `A` and `B` swapped.
    CaseB,
    /// The optimum balances both quotients: `rho_A(x) = rho_B(x)`.
    CaseGeneral,
}

/// `min over unit x of max(rho_A(x), rho_B(x))`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimaxResult {
    pub case: MinimaxCase,
    pub value: f64,
    pub x_opt: DVector<C64>,
    /// Maximizer of `lambda_n(A - mu (A - B))` over `[0, 1]`; general case only.
    pub mu_opt: Option<f64>,
}

/// Minimal eigenvector of `m` that keeps `rho_other` lowest within the
/// (possibly multiple) minimal eigenspace, if it satisfies `rho_other <= lambda`.
fn endpoint_case(m: &HermitianMatrix, other: &HermitianMatrix, tol: &Tolerances) -> Result<Option<(f64, DVector<C64>)>> {
    let d = eigh_desc(m)?;
    let n = d.n();
    let lam = d.eigenvalues[n - 1];
    let scale = 1.0 + d.spectral_radius();
    let mut lo = n - 1;
    while lo > 0 && d.eigenvalues[lo - 1] - d.eigenvalues[lo] <= tol.cluster_tol * scale {
        lo -= 1;
    }
    let xk = d.eigenvectors.columns(lo, n - lo).into_owned();
    let proj = eigh_desc(&other.congruence(&xk))?;
    let k = proj.n();
    let x = &xk * proj.vector(k - 1);
    let x = x.unscale(x.norm());
    let slack = tol.cert_tol * (1.0 + other.max_abs() * n as f64);
    if rayleigh(other, &x)? <= lam + slack {
        Ok(Some((lam, x)))
    } else {
        Ok(None)
    }
}

/// Solves the minimax of two Rayleigh quotients.
///
/// When neither endpoint case applies, `C = A - B` is indefinite and the
/// value is `max over mu in [0, 1] of lambda_n((1 - mu) A + mu B)`. That
/// function is concave, so its maximizer is found by bisection on the sign
/// of the right derivative. The optimal `x` is the isotropic lift at the
/// maximizer. If both endpoint cases hold, `CaseA` is reported.
pub fn qcqp_minimax(a: &HermitianMatrix, b: &HermitianMatrix, tol: &Tolerances, opts: &SolveOptions) -> Result<MinimaxResult> {
    tol.validate()?;
    opts.validate()?;
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
    }
    if let Some((value, x)) = endpoint_case(a, b, tol)? {
        return Ok(MinimaxResult { case: MinimaxCase::CaseA, value, x_opt: x, mu_opt: None });
    }
    if let Some((value, x)) = endpoint_case(b, a, tol)? {
        return Ok(MinimaxResult { case: MinimaxCase::CaseB, value, x_opt: x, mu_opt: None });
    }
    let pair = HermitianPair::new(a.clone(), a.combine(1.0, -1.0, b), *tol)?;
    let last = pair.n() - 1;
    // lambda_n is concave: increasing while the right derivative is positive
    let falling = |mu: f64| right_derivative(&pair, mu, last).map(|r| r <= 0.0);
    let mu = if falling(0.0)? {
        0.0
    } else if !falling(1.0)? {
        1.0
    } else {
        bisect_predicate(falling, 0.0, 1.0, 0.0, opts.max_bisect)?
    };
    let t = best_triple_at(&pair, mu, last)?;
    let value = sample_at(&pair, mu)?.0.lambdas[last];
    Ok(MinimaxResult { case: MinimaxCase::CaseGeneral, value, x_opt: t.x, mu_opt: Some(mu) })
}

/// One-sided derivatives `(left, right)` of `lambda_n(A - mu C)` at `mu`.
pub fn bottom_curve_slopes(pair: &HermitianPair, mu: f64) -> Result<(f64, f64)> {
    let (_, d) = sample_at(pair, mu)?;
    let last = d.n() - 1;
    let cl = cluster_from_decomposition(pair, mu, &d, last, pair.cluster_tol());
    let der = crate::eigencurve::one_sided_derivatives(&cl)?;
    Ok((der.left[last - cl.first_index], der.right[last - cl.first_index]))
}

/// Reduces `min max(x^H P1 x, x^H P2 x)` subject to `x^H T x = 1` to the
/// unit-sphere form: `A = S P1 S`, `B = S P2 S` with `S = T^{-1/2}`.
pub fn qcqp_from_constraints(
    t: &HermitianMatrix,
    p1: &HermitianMatrix,
    p2: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<(HermitianMatrix, HermitianMatrix)> {
    for m in [p1, p2] {
        if m.n() != t.n() {
            return Err(Error::DimensionMismatch { expected: t.n(), found: m.n() });
        }
    }
    let d = eigh_desc(t)?;
    let min = d.eigenvalues[d.n() - 1];
    if min <= tol.indef_tol {
        return Err(Error::NotPositiveDefinite { min });
    }
    let scale = DMatrix::from_diagonal(&DVector::from_iterator(d.n(), d.eigenvalues.iter().map(|v| C64::new(1.0 / v.sqrt(), 0.0))));
    let s = &d.eigenvectors * scale * d.eigenvectors.adjoint();
    Ok((p1.congruence(&s), p2.congruence(&s)))
}
