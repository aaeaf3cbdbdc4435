use nalgebra::DMatrix;

use super::{eigh_desc, spectral_norm, Tolerances, C64};
use crate::{Error, Result};

/// A dense Hermitian matrix, stored exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(DMatrix<C64>);

impl HermitianMatrix {
    /// Validates and symmetrizes `m`.
    ///
    /// `herm_tol` is relative to the largest entry magnitude. Inputs within
    /// tolerance are replaced by `(M + M^H) / 2`, so the stored diagonal is real.
    pub fn new(m: DMatrix<C64>, herm_tol: f64) -> Result<Self> {
        let (rows, cols) = m.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::Empty);
        }
        let mut max_abs = 0.0f64;
        for j in 0..cols {
            for i in 0..rows {
                let z = m[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
                max_abs = max_abs.max(z.norm());
            }
        }
        let mut asymmetry = 0.0f64;
        for j in 0..cols {
            for i in 0..=j {
                asymmetry = asymmetry.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        let limit = herm_tol * max_abs;
        if asymmetry > limit {
            return Err(Error::NotHermitian { asymmetry, limit });
        }
        Ok(Self::symmetrized(&m))
    }

    /// `(M + M^H) / 2` without any tolerance check.
    pub fn symmetrized(m: &DMatrix<C64>) -> Self {
        let n = m.nrows();
        let mut out = m.clone();
        for j in 0..n {
            for i in 0..=j {
                let v = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
        Self(out)
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        let n = d.len();
        Self(DMatrix::from_fn(n, n, |i, j| if i == j { C64::new(d[i], 0.0) } else { C64::new(0.0, 0.0) }))
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.0
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// `a M + b N` for real scalars; the result is exactly Hermitian.
    pub fn combine(&self, a: f64, b: f64, other: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix(self.0.map(|z| z * a) + other.0.map(|z| z * b))
    }

    /// `Q^H M Q`, re-symmetrized.
    pub fn congruence(&self, q: &DMatrix<C64>) -> HermitianMatrix {
        Self::symmetrized(&(q.adjoint() * &self.0 * q))
    }
}

impl std::ops::Index<(usize, usize)> for HermitianMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

/// A validated problem instance `(A, C)`.
#[derive(Debug, Clone)]
pub struct HermitianPair {
    a: HermitianMatrix,
    c: HermitianMatrix,
    norm_a: f64,
    norm_c: f64,
    c_eigenvalues: Vec<f64>,
    tol: Tolerances,
}

impl HermitianPair {
    pub fn new(a: HermitianMatrix, c: HermitianMatrix, tol: Tolerances) -> Result<Self> {
        tol.validate()?;
        if a.n() != c.n() {
            return Err(Error::DimensionMismatch { expected: a.n(), found: c.n() });
        }
        let c_eigenvalues = eigh_desc(&c)?.eigenvalues;
        let max = c_eigenvalues[0];
        let min = *c_eigenvalues.last().unwrap();
        if !(min < -tol.indef_tol && max > tol.indef_tol) {
            return Err(Error::NotIndefinite { min, max });
        }
        let norm_a = spectral_norm(&a)?;
        let norm_c = max.max(-min);
        Ok(Self { a, c, norm_a, norm_c, c_eigenvalues, tol })
    }

    pub fn a(&self) -> &HermitianMatrix {
        &self.a
    }

    pub fn c(&self) -> &HermitianMatrix {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// Spectral norm of `A`.
    pub fn norm_a(&self) -> f64 {
        self.norm_a
    }

    /// Spectral norm of `C`.
    pub fn norm_c(&self) -> f64 {
        self.norm_c
    }

    /// Eigenvalues of `C`, descending.
    pub fn c_eigenvalues(&self) -> &[f64] {
        &self.c_eigenvalues
    }

    pub fn c_min(&self) -> f64 {
        *self.c_eigenvalues.last().unwrap()
    }

    pub fn c_max(&self) -> f64 {
        self.c_eigenvalues[0]
    }

    /// Smallest positive and largest negative eigenvalue of `C`, if `C` is nonsingular.
    pub fn c_inner_eigenvalues(&self) -> Option<(f64, f64)> {
        let t = self.tol.indef_tol;
        if self.c_eigenvalues.iter().any(|v| v.abs() <= t) {
            return None;
        }
        let pos = self.c_eigenvalues.iter().copied().filter(|&v| v > 0.0).fold(f64::INFINITY, f64::min);
        let neg = self.c_eigenvalues.iter().copied().filter(|&v| v < 0.0).fold(f64::NEG_INFINITY, f64::max);
        Some((pos, neg))
    }

    pub fn c_is_singular(&self) -> bool {
        self.c_inner_eigenvalues().is_none()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// Absolute cluster gap threshold for this pair.
    pub fn cluster_tol(&self) -> f64 {
        self.tol.cluster_abs(self.norm_a)
    }

    /// `A - mu C` without finiteness checks.
    pub(crate) fn pencil(&self, mu: f64) -> HermitianMatrix {
        self.a.combine(1.0, -mu, &self.c)
    }

    /// Same pair with different tolerances.
    pub fn with_tolerances(&self, tol: Tolerances) -> Result<Self> {
        Self::new(self.a.clone(), self.c.clone(), tol)
    }
}

/// Checks shapes, symmetrizes both matrices and verifies that `C` is indefinite.
pub fn validate_pair(a: &DMatrix<C64>, c: &DMatrix<C64>, tol: Tolerances) -> Result<HermitianPair> {
    tol.validate()?;
    if a.shape() != c.shape() {
        return Err(Error::DimensionMismatch { expected: a.nrows(), found: c.nrows() });
    }
    let a = HermitianMatrix::new(a.clone(), tol.herm_tol)?;
    let c = HermitianMatrix::new(c.clone(), tol.herm_tol)?;
    HermitianPair::new(a, c, tol)
}

/// `A - mu C`.
pub fn pencil_eval(pair: &HermitianPair, mu: f64) -> Result<HermitianMatrix> {
    if !mu.is_finite() {
        return Err(Error::NonFiniteParameter(mu));
    }
    Ok(pair.pencil(mu))
}

/// Builds a complex matrix from real row slices.
pub fn real_matrix(rows: &[&[f64]]) -> DMatrix<C64> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    DMatrix::from_fn(n, m, |i, j| C64::new(rows[i][j], 0.0))
}

/// Builds a complex matrix from rows of `(re, im)` pairs.
pub fn complex_matrix(rows: &[&[(f64, f64)]]) -> DMatrix<C64> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    DMatrix::from_fn(n, m, |i, j| C64::new(rows[i][j].0, rows[i][j].1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tilted_2x2(t: f64) -> (DMatrix<C64>, DMatrix<C64>) {
        (real_matrix(&[&[1.0, t], &[t, 1.0]]), real_matrix(&[&[0.2, 0.0], &[0.0, -0.5]]))
    }

    #[test]
    fn tilted_2x2_is_valid() {
        let (a, c) = tilted_2x2(0.2);
        let pair = validate_pair(&a, &c, Tolerances::default()).unwrap();
        assert_eq!(pair.n(), 2);
        assert_eq!(pair.c_max(), 0.2);
        assert_eq!(pair.c_min(), -0.5);
    }

    #[test]
    fn identity_c_is_rejected() {
        let (a, _) = tilted_2x2(0.2);
        let c = DMatrix::<C64>::identity(2, 2);
        assert!(matches!(validate_pair(&a, &c, Tolerances::default()), Err(Error::NotIndefinite { .. })));
    }

    #[test]
    fn conj_symmetry_violation_is_rejected() {
        let a = complex_matrix(&[&[(1.0, 0.0), (0.0, 1.0)], &[(0.0, 1.0), (1.0, 0.0)]]);
        let c = real_matrix(&[&[0.2, 0.0], &[0.0, -0.5]]);
        assert!(matches!(validate_pair(&a, &c, Tolerances::default()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn small_asymmetry_is_symmetrized() {
        let a = complex_matrix(&[&[(1.0, 1e-14), (0.3, 0.1)], &[(0.3 + 1e-13, -0.1), (2.0, 0.0)]]);
        let h = HermitianMatrix::new(a, 1e-10).unwrap();
        assert_eq!(h[(0, 0)].im, 0.0);
        assert_eq!(h[(0, 1)], h[(1, 0)].conj());
    }

    #[test]
    fn shape_errors() {
        let a = real_matrix(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        let (_, c) = tilted_2x2(0.0);
        assert!(matches!(validate_pair(&a, &c, Tolerances::default()), Err(Error::DimensionMismatch { .. })));
        let rect = real_matrix(&[&[1.0, 0.0]]);
        assert!(matches!(HermitianMatrix::new(rect, 1e-10), Err(Error::NotSquare { .. })));
        let nan = real_matrix(&[&[f64::NAN]]);
        assert!(matches!(HermitianMatrix::new(nan, 1e-10), Err(Error::NonFiniteEntry { .. })));
    }

    #[test]
    fn pencil_values() {
        let (a, c) = tilted_2x2(0.2);
        let pair = validate_pair(&a, &c, Tolerances::default()).unwrap();
        assert_eq!(pencil_eval(&pair, 0.0).unwrap(), *pair.a());
        let h = pencil_eval(&pair, 1.0).unwrap();
        let expect = real_matrix(&[&[0.8, 0.2], &[0.2, 1.5]]);
        assert!((h.as_matrix() - expect).norm() < 1e-15);
        let sum = pencil_eval(&pair, 0.7).unwrap().into_matrix() + pencil_eval(&pair, -0.7).unwrap().into_matrix();
        assert!((sum - pair.a().as_matrix() * C64::new(2.0, 0.0)).norm() < 1e-15);
        assert!(matches!(pencil_eval(&pair, f64::INFINITY), Err(Error::NonFiniteParameter(_))));
    }

    #[test]
    fn bad_tolerances_are_rejected() {
        let (a, c) = tilted_2x2(0.2);
        let tol = Tolerances { cluster_tol: 1e-14, eig_tol: 1e-11, ..Tolerances::default() };
        assert!(matches!(validate_pair(&a, &c, tol), Err(Error::InvalidOption(_))));
        let tol = Tolerances { cert_tol: 0.0, ..Tolerances::default() };
        assert!(validate_pair(&a, &c, tol).is_err());
    }
}
