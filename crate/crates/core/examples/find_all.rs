//! Every certified 2D-eigentriple of a pair whose curves cross.
//!
//! Pass `--a` and `--c` matrix files to solve your own pair.
use twodevp::cli::io::read_matrix_file;
use twodevp::hermpair::real_matrix;
use twodevp::solver::{find_all, SolveOptions};
use twodevp::{validate_pair, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().collect();
    let path = |flag: &str| args.iter().position(|a| a == flag).and_then(|i| args.get(i + 1)).map(std::path::PathBuf::from);
    let (a, c) = match (path("--a"), path("--c")) {
        (Some(a), Some(c)) => (read_matrix_file(&a)?.matrix, read_matrix_file(&c)?.matrix),
        _ => (
            real_matrix(&[&[2.0, 0.0, 1.0, 0.0], &[0.0, 0.0, 1.0, 0.0], &[1.0, 1.0, 0.0, 0.0], &[0.0, 0.0, 0.0, 0.6]]),
            real_matrix(&[&[1.0, 0.0, 1.0, 0.0], &[0.0, 1.0, 1.0, 0.0], &[1.0, 1.0, 0.0, 0.0], &[0.0, 0.0, 0.0, 0.6]]),
        ),
    };
    let pair = validate_pair(&a, &c, Tolerances::default())?;
    let report = find_all(&pair, &SolveOptions::default())?;

    println!("|mu| <= {:.6} ({:?})", report.mu_bound.bound, report.mu_bound.source);
    println!("lambda in [{:.6}, {:.6}]", report.lambda_bounds.lower, report.lambda_bounds.upper);
    for t in &report.triples {
        println!("mu = {:+.10}  lambda = {:+.10}  residual = {:.1e}", t.mu, t.lambda, t.residuals.max());
    }
    for level in &report.line_families {
        println!("line family at lambda = {level:.10}");
    }
    Ok(())
}
