use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::{HermitianMatrix, C64};
use crate::{Error, Result};

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted descending.
///
/// Column `i` of `eigenvectors` belongs to `eigenvalues[i]`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DMatrix<C64>,
}

impl SpectralDecomposition {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vector(&self, i: usize) -> DVector<C64> {
        self.eigenvectors.column(i).into_owned()
    }

    /// Largest eigenvalue magnitude.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues[0].abs().max(self.eigenvalues[self.n() - 1].abs())
    }
}

/// Dense Hermitian eigensolver, eigenvalues non-increasing.
///
/// Deterministic for a fixed input. Ties keep the solver's output order.
pub fn eigh_desc(m: &HermitianMatrix) -> Result<SpectralDecomposition> {
    let n = m.n();
    let eig = SymmetricEigen::try_new(m.as_matrix().clone(), f64::EPSILON, 1000 * n.max(1)).ok_or(Error::EigSolverFailure)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    if order.iter().any(|&i| !eig.eigenvalues[i].is_finite()) {
        return Err(Error::EigSolverFailure);
    }
    let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

/// `max |eigenvalue|`.
pub fn spectral_norm(m: &HermitianMatrix) -> Result<f64> {
    Ok(eigh_desc(m)?.spectral_radius())
}

/// Rayleigh quotient `x^H M x / x^H x`.
pub fn rayleigh(m: &HermitianMatrix, x: &DVector<C64>) -> Result<f64> {
    if x.len() != m.n() {
        return Err(Error::DimensionMismatch { expected: m.n(), found: x.len() });
    }
    let xx = x.norm_squared();
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = x.dotc(&(m.as_matrix() * x));
    // M is stored exactly Hermitian, so the imaginary part is rounding only.
    debug_assert!(q.im.abs() <= 1e-8 * (1.0 + q.norm()));
    Ok(q.re / xx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermpair::real_matrix;

    fn herm(rows: &[&[f64]]) -> HermitianMatrix {
        HermitianMatrix::new(real_matrix(rows), 1e-12).unwrap()
    }

    fn check_invariants(m: &HermitianMatrix, d: &SpectralDecomposition) {
        let norm = d.spectral_radius().max(1.0);
        for w in d.eigenvalues.windows(2) {
            assert!(w[0] >= w[1]);
        }
        for i in 0..d.n() {
            let v = d.vector(i);
            let r = m.as_matrix() * &v - &v * C64::new(d.eigenvalues[i], 0.0);
            assert!(r.norm() <= 1e-11 * norm, "residual {}", r.norm());
        }
        let vv = d.eigenvectors.adjoint() * &d.eigenvectors;
        assert!((vv - DMatrix::identity(d.n(), d.n())).norm() <= 1e-11);
    }

    #[test]
    fn diagonal_input() {
        let m = HermitianMatrix::from_real_diagonal(&[3.0, 1.0, 2.0]);
        let d = eigh_desc(&m).unwrap();
        assert_eq!(d.eigenvalues, vec![3.0, 2.0, 1.0]);
        check_invariants(&m, &d);
        // permuted identity
        assert!((d.eigenvectors[(0, 0)].norm() - 1.0).abs() < 1e-15);
        assert!((d.eigenvectors[(2, 1)].norm() - 1.0).abs() < 1e-15);
        assert!((d.eigenvectors[(1, 2)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn swap_matrix() {
        let m = herm(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let d = eigh_desc(&m).unwrap();
        assert!((d.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!((d.eigenvalues[1] + 1.0).abs() < 1e-15);
        check_invariants(&m, &d);
    }

    /// Roots of the characteristic polynomial by bisection on sign changes.
    fn char_poly_roots(coeffs: [f64; 4], lo: f64, hi: f64) -> Vec<f64> {
        let p = |x: f64| ((coeffs[0] * x + coeffs[1]) * x + coeffs[2]) * x + coeffs[3];
        let steps = 20_000;
        let mut roots = Vec::new();
        for k in 0..steps {
            let mut a = lo + (hi - lo) * k as f64 / steps as f64;
            let mut b = lo + (hi - lo) * (k + 1) as f64 / steps as f64;
            if p(a) * p(b) > 0.0 {
                continue;
            }
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if p(a) * p(m) <= 0.0 {
                    b = m;
                } else {
                    a = m;
                }
            }
            roots.push(0.5 * (a + b));
        }
        roots.sort_by(|x, y| y.total_cmp(x));
        roots
    }

    #[test]
    fn inflection_a_matches_characteristic_polynomial() {
        let a1 = herm(&[&[2.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
        // det(lambda I - A1) = lambda^3 - 2 lambda^2 - 2 lambda + 2
        let roots = char_poly_roots([1.0, -2.0, -2.0, 2.0], -5.0, 5.0);
        let d = eigh_desc(&a1).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(&d.eigenvalues) {
            assert!((r - e).abs() < 1e-12, "{r} vs {e}");
        }
        check_invariants(&a1, &d);
    }

    #[test]
    fn complex_hermitian_input() {
        let m = HermitianMatrix::new(
            crate::hermpair::complex_matrix(&[
                &[(2.0, 0.0), (0.0, 1.0), (0.5, -0.5)],
                &[(0.0, -1.0), (-1.0, 0.0), (0.0, 0.3)],
                &[(0.5, 0.5), (0.0, -0.3), (0.5, 0.0)],
            ]),
            1e-12,
        )
        .unwrap();
        let d = eigh_desc(&m).unwrap();
        check_invariants(&m, &d);
        let trace: f64 = d.eigenvalues.iter().sum();
        assert!((trace - 1.5).abs() < 1e-13);
    }

    #[test]
    fn norms() {
        assert_eq!(spectral_norm(&HermitianMatrix::from_real_diagonal(&[2.0, -3.0])).unwrap(), 3.0);
        assert_eq!(spectral_norm(&HermitianMatrix::identity(4)).unwrap(), 1.0);
    }

    #[test]
    fn spectral_norm_matches_power_iteration() {
        let a1 = herm(&[&[2.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
        let mut v = DVector::from_element(3, C64::new(1.0, 0.0));
        let mut est = 0.0;
        for _ in 0..2000 {
            let w = a1.as_matrix() * &v;
            est = w.norm() / v.norm();
            v = &w / C64::new(w.norm(), 0.0);
        }
        assert!((spectral_norm(&a1).unwrap() - est).abs() < 1e-12);
    }

    #[test]
    fn rayleigh_values() {
        let a1 = herm(&[&[2.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
        let c1 = herm(&[&[1.0, 0.0, 1.0], &[0.0, 1.0, 1.0], &[1.0, 1.0, 0.0]]);
        let e3 = DVector::from_vec(vec![C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
        assert_eq!(rayleigh(&a1, &e3).unwrap(), 0.0);
        assert_eq!(rayleigh(&c1, &e3).unwrap(), 0.0);
        let d = eigh_desc(&a1).unwrap();
        for i in 0..3 {
            assert!((rayleigh(&a1, &d.vector(i)).unwrap() - d.eigenvalues[i]).abs() < 1e-14);
        }
        assert_eq!(rayleigh(&a1, &DVector::zeros(3)), Err(Error::ZeroVector));
    }
}
