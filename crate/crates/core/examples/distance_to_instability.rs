//! Distance to instability of a stable 4x4 matrix as an eigencurve maximization.
use twodevp::apps::{distance_to_instability, sigma_min, spectral_abscissa, StabilityOptions};
use twodevp::hermpair::complex_matrix;
use twodevp::Tolerances;

fn main() -> twodevp::Result<()> {
    let z = (0.0, 0.0);
    let one = (1.0, 0.0);
    let ahat =
        complex_matrix(&[&[(-0.4, 6.0), one, z, z], &[one, (-0.1, 1.0), one, z], &[z, one, (-1.0, -3.0), one], &[z, z, one, (-5.0, 1.0)]]);
    println!("spectral abscissa = {:.6}", spectral_abscissa(&ahat)?);

    let r = distance_to_instability(&ahat, &Tolerances::default(), &StabilityOptions::default())?;
    println!("beta = {:.12} at mu = {:.12} (SVD check {:.12})", r.beta, r.mu_opt, r.certificate);
    println!("{} local minima of sigma_min(Ahat - i mu I) on [-{:.3}, {:.3}]:", r.local_minima.len(), r.norm_a, r.norm_a);
    for (mu, s) in &r.local_minima {
        println!("  mu = {mu:+.8}  sigma = {s:.8}");
    }

    let shifted = &ahat - nalgebra::DMatrix::identity(4, 4) * twodevp::C64::new(0.0, r.mu_opt);
    println!("sigma_min recomputed: {:.12}", sigma_min(&shifted)?);
    Ok(())
}
