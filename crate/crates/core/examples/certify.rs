//! Residual certification of candidate triples, including a whole line family.
use nalgebra::DVector;
use twodevp::hermpair::real_matrix;
use twodevp::{certify, validate_pair, Tolerances, C64};

fn main() -> twodevp::Result<()> {
    let tol = Tolerances::default();

    let a = real_matrix(&[&[2.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
    let c = real_matrix(&[&[1.0, 0.0, 1.0], &[0.0, 1.0, 1.0], &[1.0, 1.0, 0.0]]);
    let pair = validate_pair(&a, &c, tol)?;
    let e3 = DVector::from_vec(vec![C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
    let t = certify(&pair, 1.0, 0.0, &e3, &tol)?;
    println!("(1, 0, e3): certified = {}, residuals = {:?}", t.certified, t.residuals);

    // every point of the horizontal line lambda = -1 is a 2D-eigenvalue
    let a = real_matrix(&[&[1.0, 2.0, 0.0], &[2.0, 1.0, 0.0], &[0.0, 0.0, 4.0]]);
    let c = real_matrix(&[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, -1.0]]);
    let pair = validate_pair(&a, &c, tol)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let x = DVector::from_vec(vec![C64::new(s, 0.0), C64::new(-s, 0.0), C64::new(0.0, 0.0)]);
    for mu in [-5.0, 0.0, 3.7, 10.0] {
        let t = certify(&pair, mu, -1.0, &x, &tol)?;
        println!("mu = {mu:>5}: certified = {}, max residual = {:.1e}", t.certified, t.residuals.max());
    }

    // a wrong lambda is reported, not rejected
    let t = certify(&pair, 0.0, -0.9, &x, &tol)?;
    println!("lambda = -0.9: certified = {}, eig residual = {:.3}", t.certified, t.residuals.eig);
    Ok(())
}
