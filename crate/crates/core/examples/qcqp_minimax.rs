//! min over unit x of max(x^H A x, x^H B x), three ways to land on the answer.
use twodevp::apps::{qcqp_from_constraints, qcqp_minimax};
use twodevp::solver::SolveOptions;
use twodevp::{HermitianMatrix, Tolerances};

fn main() -> twodevp::Result<()> {
    let tol = Tolerances::default();
    let opts = SolveOptions::default();
    let cases =
        [("endpoint at B", [1.0, 3.0], [2.0, 4.0]), ("endpoint at A", [5.0, 6.0], [0.5, 7.0]), ("interior mu", [0.0, 2.0], [3.0, 1.0])];
    for (name, a, b) in cases {
        let a = HermitianMatrix::from_real_diagonal(&a);
        let b = HermitianMatrix::from_real_diagonal(&b);
        let r = qcqp_minimax(&a, &b, &tol, &opts)?;
        println!("{name:>14}: {:?} value = {:.10} mu = {:?}", r.case, r.value, r.mu_opt);
    }

    // x^H T x = 1 with two quadratic objectives, reduced to the unit sphere
    let t = HermitianMatrix::from_real_diagonal(&[4.0, 1.0]);
    let p1 = HermitianMatrix::from_real_diagonal(&[0.0, 2.0]);
    let p2 = HermitianMatrix::from_real_diagonal(&[12.0, 1.0]);
    let (a, b) = qcqp_from_constraints(&t, &p1, &p2, &tol)?;
    let r = qcqp_minimax(&a, &b, &tol, &opts)?;
    println!("constrained: {:?} value = {:.10}", r.case, r.value);
    Ok(())
}
