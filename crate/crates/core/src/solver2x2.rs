//! Closed-form 2D-eigentriples for `n = 2`.
//!
//! After a unitary change of variables `C = Q diag(c1, c2) Q^H` with
//! `c1 > 0 > c2`, every isotropic vector is a multiple of
//! `x(alpha) = [1/sqrt(c1); alpha/sqrt(-c2)]` with `|alpha| = 1`, and `mu` is
//! real only when `alpha * a12` is real. That leaves two triples when
//! `a12 != 0` and a one-parameter family sharing a single `(mu, lambda)`
//! when `a12 = 0`.

use nalgebra::{DMatrix, DVector};

use crate::hermpair::{certify, eigh_desc, HermitianPair, TwoDEigentriple, C64};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoByTwoCase {
    /// `a12 != 0`: two distinct 2D-eigenvalues.
    OffDiag,
    /// `a12 = 0`: one 2D-eigenvalue with a circle of eigenvectors.
    Diag,
}

#[derive(Debug, Clone)]
pub struct TwoByTwoSolution {
    pub case: TwoByTwoCase,
    /// Sorted by `mu`. Two entries in either case; in the diag case they share
    /// `(mu, lambda)` and use `alpha = 1` and `alpha = -1`.
    pub triples: Vec<TwoDEigentriple>,
    /// Unitary `Q` with `Q^H C Q = diag(c1, c2)`.
    pub transform: DMatrix<C64>,
    /// `(c1, c2)`, `c1 > 0 > c2`.
    pub c_diag: (f64, f64),
    /// Set in the diag case: every `alpha` on the unit circle gives a triple.
    pub family: bool,
    /// `|a12|` was above the classification threshold but within a factor 100 of it.
    pub near_threshold: bool,
}

impl TwoByTwoSolution {
    /// Distinct `(mu, lambda)` pairs.
    pub fn eigenvalues(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::new();
        for t in &self.triples {
            if !out.iter().any(|&(m, l)| m == t.mu && l == t.lambda) {
                out.push((t.mu, t.lambda));
            }
        }
        out
    }

    /// Unit eigenvector `Q x(alpha)` of the diag-case family; `None` in the offdiag case.
    pub fn family_vector(&self, alpha: C64) -> Option<DVector<C64>> {
        if !self.family {
            return None;
        }
        let v = self.transform.clone() * isotropic(self.c_diag.0, self.c_diag.1, alpha);
        let nrm = v.norm();
        Some(v.unscale(nrm))
    }
}

fn isotropic(c1: f64, c2: f64, alpha: C64) -> DVector<C64> {
    DVector::from_vec(vec![C64::new(1.0 / c1.sqrt(), 0.0), alpha / (-c2).sqrt()])
}

fn is_canonical_diagonal(pair: &HermitianPair) -> bool {
    let c = pair.c();
    c[(0, 1)] == C64::new(0.0, 0.0) && c[(0, 0)].re > 0.0 && c[(1, 1)].re < 0.0
}

pub fn solve_2x2(pair: &HermitianPair) -> Result<TwoByTwoSolution> {
    if pair.n() != 2 {
        return Err(Error::WrongDimension(pair.n()));
    }
    let tol = pair.tolerances();
    let (q, c1, c2) = if is_canonical_diagonal(pair) {
        (DMatrix::identity(2, 2), pair.c()[(0, 0)].re, pair.c()[(1, 1)].re)
    } else {
        let d = eigh_desc(pair.c())?;
        (d.eigenvectors, d.eigenvalues[0], d.eigenvalues[1])
    };
    if !(c1 > tol.indef_tol && c2 < -tol.indef_tol) {
        return Err(Error::NotIndefinite { min: c2, max: c1 });
    }
    let a = pair.a().congruence(&q);
    let a11 = a[(0, 0)].re;
    let a22 = a[(1, 1)].re;
    let a12 = a[(0, 1)];
    let threshold = tol.zero_tol * (1.0 + pair.norm_a());
    let r = (-c1 * c2).sqrt();
    let dc = c1 - c2;

    let mut cands: Vec<(f64, f64, C64)> = Vec::with_capacity(2);
    let case = if a12.norm() <= threshold {
        let mu = (a11 - a22) / dc;
        let lambda = (a22 * c1 - a11 * c2) / dc;
        cands.push((mu, lambda, C64::new(1.0, 0.0)));
        cands.push((mu, lambda, C64::new(-1.0, 0.0)));
        TwoByTwoCase::Diag
    } else {
        let m = a12.norm();
        for s in [1.0, -1.0] {
            let mu = (a11 - a22 + s * m * (c1 + c2) / r) / dc;
            let lambda = (a11 / c1 - a22 / c2 + s * 2.0 * m / r) / (dc / (-c1 * c2));
            // alpha * a12 = s |a12|
            let alpha = (a12.conj() / m) * s;
            cands.push((mu, lambda, alpha));
        }
        TwoByTwoCase::OffDiag
    };

    let mut triples = Vec::with_capacity(2);
    for (mu, lambda, alpha) in cands {
        let x = &q * isotropic(c1, c2, alpha);
        let t = certify(pair, mu, lambda, &x, tol)?;
        if !t.certified {
            return Err(Error::CertificationFailed { mu, residual: t.residuals.max() });
        }
        triples.push(t);
    }
    triples.sort_by(|s, t| s.mu.total_cmp(&t.mu));

    let near_threshold = case == TwoByTwoCase::OffDiag && a12.norm() <= 100.0 * threshold;
    Ok(TwoByTwoSolution { case, triples, transform: q, c_diag: (c1, c2), family: case == TwoByTwoCase::Diag, near_threshold })
}
