use nalgebra::DVector;

use super::{HermitianPair, Tolerances, C64};
use crate::{Error, Result};

/// Residuals of the three defining equations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Residuals {
    /// `||(A - mu C) x - lambda x||_2`
    pub eig: f64,
    /// `|x^H C x|`
    pub iso: f64,
    /// `|x^H x - 1|`
    pub norm: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.eig.max(self.iso).max(self.norm)
    }
}

/// A candidate or certified 2D-eigentriple `(mu, lambda, x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoDEigentriple {
    pub mu: f64,
    pub lambda: f64,
    /// Unit vector.
    pub x: DVector<C64>,
    pub residuals: Residuals,
    pub certified: bool,
}

/// Normalizes `x` and evaluates all three residuals at `(mu, lambda)`.
///
/// Residuals are invariant under `x -> e^{i theta} x`, so no phase is fixed.
pub fn certify(pair: &HermitianPair, mu: f64, lambda: f64, x: &DVector<C64>, tol: &Tolerances) -> Result<TwoDEigentriple> {
    if x.len() != pair.n() {
        return Err(Error::DimensionMismatch { expected: pair.n(), found: x.len() });
    }
    if !mu.is_finite() {
        return Err(Error::NonFiniteParameter(mu));
    }
    if !lambda.is_finite() {
        return Err(Error::NonFiniteParameter(lambda));
    }
    let nrm = x.norm();
    if nrm == 0.0 || !nrm.is_finite() {
        return Err(Error::ZeroVector);
    }
    let x = x.unscale(nrm);
    let a = pair.a().as_matrix();
    let c = pair.c().as_matrix();
    let cx = c * &x;
    let r = a * &x - &cx * C64::new(mu, 0.0) - &x * C64::new(lambda, 0.0);
    let residuals = Residuals { eig: r.norm(), iso: x.dotc(&cx).norm(), norm: (x.norm_squared() - 1.0).abs() };
    let certified = residuals.max() <= tol.cert_tol;
    Ok(TwoDEigentriple { mu, lambda, x, residuals, certified })
}

impl TwoDEigentriple {
    /// Certifies `x` at `mu` with `lambda` taken as the Rayleigh quotient of `A - mu C`.
    pub(crate) fn from_vector(pair: &HermitianPair, mu: f64, x: &DVector<C64>) -> Result<Self> {
        let h = pair.pencil(mu);
        let lambda = super::rayleigh(&h, x)?;
        certify(pair, mu, lambda, x, pair.tolerances())
    }

    /// `||C x||`, the rate at which the eigen-residual grows with `mu`.
    pub fn c_norm_of_x(&self, pair: &HermitianPair) -> f64 {
        (pair.c().as_matrix() * &self.x).norm()
    }
}
