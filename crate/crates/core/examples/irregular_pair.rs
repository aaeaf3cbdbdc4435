//! A pair with infinitely many 2D-eigenvalues along a horizontal line.
use twodevp::hermpair::real_matrix;
use twodevp::solver::{common_spectrum, find_all, line_family_triple, regularity_probe, SolveOptions};
use twodevp::{validate_pair, Tolerances};

fn main() -> twodevp::Result<()> {
    let a = real_matrix(&[&[1.0, 2.0, 0.0], &[2.0, 1.0, 0.0], &[0.0, 0.0, 4.0]]);
    let c = real_matrix(&[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, -1.0]]);
    let pair = validate_pair(&a, &c, Tolerances::default())?;
    let opts = SolveOptions::default();

    let v = regularity_probe(&pair, &opts)?;
    println!("regular = {}, witness = {:?}", v.regular, v.witness_sigma);
    println!("eigenvalues shared by mu = -2, 0.5, 7: {:?}", common_spectrum(&pair, &[-2.0, 0.5, 7.0])?);

    let report = find_all(&pair, &opts)?;
    println!("line families: {:?}", report.line_families);
    for t in &report.triples {
        println!("isolated: mu = {:+.10}, lambda = {:+.10}", t.mu, t.lambda);
    }
    let on_line = line_family_triple(&pair, 2.5, report.line_families[0])?;
    println!("point on the line at mu = 2.5: certified = {}", on_line.certified);
    Ok(())
}
