//! Problem instances for the two-dimensional eigenvalue problem.
//!
//! A pair `(A, C)` of Hermitian matrices with `C` indefinite defines the
//! one-parameter pencil `H(mu) = A - mu C`. A 2D-eigentriple `(mu, lambda, x)`
//! satisfies
//!
//! ```text
//! (A - mu C) x = lambda x,   x^H C x = 0,   x^H x = 1
//! ```
//!
//! with `mu` and `lambda` real. This module holds the validated instance
//! types, pencil evaluation, the dense Hermitian eigensolver wrapper that
//! everything else is built on, and residual certification of candidate
//! triples.

mod certify;
mod matrix;
mod spectral;

pub use certify::{certify, Residuals, TwoDEigentriple};
pub use matrix::{complex_matrix, pencil_eval, real_matrix, validate_pair, HermitianMatrix, HermitianPair};
pub use spectral::{eigh_desc, rayleigh, spectral_norm, SpectralDecomposition};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Numerical tolerances.
///
/// `herm_tol` is relative to the largest entry magnitude of the matrix being
/// validated and `cluster_tol` is relative to `1 + ||A||`. The others are
/// absolute.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    pub herm_tol: f64,
    pub indef_tol: f64,
    pub eig_tol: f64,
    pub cert_tol: f64,
    pub cluster_tol: f64,
    pub zero_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { herm_tol: 1e-10, indef_tol: 1e-12, eig_tol: 1e-11, cert_tol: 1e-8, cluster_tol: 1e-7, zero_tol: 1e-10 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> crate::Result<()> {
        let all = [
            ("herm_tol", self.herm_tol),
            ("indef_tol", self.indef_tol),
            ("eig_tol", self.eig_tol),
            ("cert_tol", self.cert_tol),
            ("cluster_tol", self.cluster_tol),
            ("zero_tol", self.zero_tol),
        ];
        for (name, v) in all {
            if !(v.is_finite() && v > 0.0) {
                return Err(crate::Error::InvalidOption(format!("{name} must be positive and finite")));
            }
        }
        if self.cluster_tol < self.eig_tol {
            return Err(crate::Error::InvalidOption("cluster_tol must be >= eig_tol".into()));
        }
        Ok(())
    }

    /// Absolute eigenvalue-gap threshold for a pencil whose `A` has spectral norm `norm_a`.
    pub fn cluster_abs(&self, norm_a: f64) -> f64 {
        self.cluster_tol * (1.0 + norm_a)
    }
}
