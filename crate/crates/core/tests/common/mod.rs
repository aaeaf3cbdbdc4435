//! Random instances and small dense helpers shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use twodevp::{validate_pair, HermitianPair, Tolerances, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> DVector<C64> {
    DVector::from_fn(n, |_, _| gaussian(rng))
}

pub fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> DVector<C64> {
    let v = random_vector(rng, n);
    let norm = v.norm();
    v / C64::new(norm, 0.0)
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<C64> {
    let g = DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    (&g + g.adjoint()) * C64::new(0.5 / (n as f64).sqrt(), 0.0)
}

pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<C64> {
    let g = DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    g.qr().q()
}

/// `Q diag(d) Q^H` with a random unitary `Q`.
pub fn with_spectrum(rng: &mut ChaCha8Rng, d: &[f64]) -> DMatrix<C64> {
    let q = random_unitary(rng, d.len());
    let dm = DMatrix::from_fn(d.len(), d.len(), |i, j| if i == j { C64::new(d[i], 0.0) } else { C64::new(0.0, 0.0) });
    let m = &q * dm * q.adjoint();
    (&m + m.adjoint()) * C64::new(0.5, 0.0)
}

/// Nonsingular indefinite spectrum with magnitudes in `[0.3, 1]`.
pub fn indefinite_spectrum(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let neg = rng.random_range(1..n);
    (0..n).map(|i| if i < neg { -1.0 } else { 1.0 } * rng.random_range(0.3..1.0)).collect()
}

pub fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> HermitianPair {
    let a = random_hermitian(rng, n);
    let d = indefinite_spectrum(rng, n);
    let c = with_spectrum(rng, &d);
    validate_pair(&a, &c, Tolerances::default()).expect("random pair is valid")
}

/// Indefinite `C` with `zeros` zero eigenvalues.
pub fn random_singular_pair(rng: &mut ChaCha8Rng, n: usize, zeros: usize) -> HermitianPair {
    let a = random_hermitian(rng, n);
    let mut d = indefinite_spectrum(rng, n - zeros);
    d.extend(std::iter::repeat_n(0.0, zeros));
    let c = with_spectrum(rng, &d);
    validate_pair(&a, &c, Tolerances::default()).expect("random pair is valid")
}

/// Descending eigenvalues from nalgebra's Hermitian solver, bypassing the crate.
pub fn eigenvalues_desc(m: &DMatrix<C64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

pub fn pencil(pair: &HermitianPair, mu: f64) -> DMatrix<C64> {
    pair.a().as_matrix() - pair.c().as_matrix() * C64::new(mu, 0.0)
}

pub fn curves_at(pair: &HermitianPair, mu: f64) -> Vec<f64> {
    eigenvalues_desc(&pencil(pair, mu))
}

pub fn quad(m: &DMatrix<C64>, x: &DVector<C64>) -> f64 {
    x.dotc(&(m * x)).re / x.norm_squared()
}

/// Random `y` with `y^H C y = 0`: a root of the quadratic along `s v + w`,
/// where `v^H C v > 0 > w^H C w`.
pub fn random_isotropic(rng: &mut ChaCha8Rng, c: &DMatrix<C64>) -> DVector<C64> {
    let n = c.nrows();
    let draw = |rng: &mut ChaCha8Rng, positive: bool| loop {
        let v = random_unit(rng, n);
        let q = quad(c, &v);
        if (q > 1e-3) == positive && q.abs() > 1e-3 {
            return v;
        }
    };
    let v = draw(rng, true);
    let w = draw(rng, false);
    let (p, r, q) = (v.dotc(&(c * &v)).re, v.dotc(&(c * &w)).re, w.dotc(&(c * &w)).re);
    let disc = (r * r - p * q).sqrt();
    let s = if rng.random_bool(0.5) { (-r + disc) / p } else { (-r - disc) / p };
    let y = v * C64::new(s, 0.0) + w;
    let norm = y.norm();
    y / C64::new(norm, 0.0)
}

/// Minimizer of a unimodal function by ternary search.
pub fn ternary_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    for _ in 0..iters {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}
