//! Closed-form 2D-eigentriples of a 2x2 pair, checked against the general solver.
use twodevp::hermpair::real_matrix;
use twodevp::solver::{find_all, SolveOptions};
use twodevp::solver2x2::solve_2x2;
use twodevp::{validate_pair, Tolerances};

fn main() -> twodevp::Result<()> {
    for t in [0.2, 0.0] {
        let a = real_matrix(&[&[1.0, t], &[t, 1.0]]);
        let c = real_matrix(&[&[0.2, 0.0], &[0.0, -0.5]]);
        let pair = validate_pair(&a, &c, Tolerances::default())?;

        let closed = solve_2x2(&pair)?;
        println!("t = {t}: {:?} case, family = {}", closed.case, closed.family);
        for tr in &closed.triples {
            println!("  closed form  mu = {:+.12}  lambda = {:.12}  residual = {:.1e}", tr.mu, tr.lambda, tr.residuals.max());
        }
        for tr in &find_all(&pair, &SolveOptions::default())?.triples {
            println!("  find_all     mu = {:+.12}  lambda = {:.12}", tr.mu, tr.lambda);
        }
    }
    Ok(())
}
