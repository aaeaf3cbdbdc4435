//! Sorted eigencurves of A - mu C and the slopes g_i = x_i^H C x_i.
use twodevp::eigencurve::{curve_slopes, sample_curves};
use twodevp::hermpair::real_matrix;
use twodevp::{validate_pair, Tolerances};

fn main() -> twodevp::Result<()> {
    let a = real_matrix(&[&[1.0, 0.2], &[0.2, 1.0]]);
    let c = real_matrix(&[&[0.2, 0.0], &[0.0, -0.5]]);
    let pair = validate_pair(&a, &c, Tolerances::default())?;

    let grid: Vec<f64> = (0..=8).map(|k| -1.0 + 0.25 * k as f64).collect();
    println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "mu", "lambda_1", "lambda_2", "g_1", "g_2");
    for s in sample_curves(&pair, &grid)? {
        println!("{:>6.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6}", s.mu, s.lambdas[0], s.lambdas[1], s.gvals[0], s.gvals[1]);
    }

    // lambda_1 is convex: its slope increases through the minimum
    for mu in [-0.5, -0.271, 0.0] {
        let (left, right) = curve_slopes(&pair, mu, 0)?;
        println!("lambda_1'({mu}) = ({left:.6}, {right:.6})");
    }
    Ok(())
}
