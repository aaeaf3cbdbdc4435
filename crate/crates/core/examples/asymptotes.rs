//! Straight-line asymptotes of the eigencurves for large |mu|.
use twodevp::eigencurve::{asymptotic_models, sample_at};
use twodevp::hermpair::real_matrix;
use twodevp::{validate_pair, Tolerances};

fn main() -> twodevp::Result<()> {
    let a = real_matrix(&[&[2.0, 1.0, 0.5], &[1.0, -1.0, 0.3], &[0.5, 0.3, 0.0]]);
    let c = real_matrix(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, -2.0]]);
    let pair = validate_pair(&a, &c, Tolerances::default())?;
    let (plus, minus) = asymptotic_models(&pair)?;

    for model in [&plus, &minus] {
        println!("{:?}", model.direction);
        for b in &model.branches {
            println!("  lambda ~ {:+.3} mu {:+.6}", b.slope, b.intercept);
        }
        let sign = if model.direction == twodevp::eigencurve::Direction::PlusInfinity { 1.0 } else { -1.0 };
        for scale in [1e2, 1e4] {
            let mu = sign * scale;
            let (s, _) = sample_at(&pair, mu)?;
            let err: Vec<String> = s.lambdas.iter().zip(model.predict(mu)).map(|(l, p)| format!("{:.2e}", (l - p).abs())).collect();
            println!("  mu = {mu:e}: |lambda - line| = {}", err.join(", "));
        }
    }
    Ok(())
}
