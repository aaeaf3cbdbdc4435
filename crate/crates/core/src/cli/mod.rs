//! Command implementations behind the `twodevp` binary.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes: 0 on
//! success, 2 for unreadable or malformed input, 3 when the input is well
//! formed but outside the domain of the operation (indefinite `C` required,
//! unstable matrix, failed certification, ...).

pub mod io;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nalgebra::DMatrix;

use crate::apps::{distance_to_instability, qcqp_from_constraints, qcqp_minimax, StabilityOptions};
use crate::eigencurve::sample_curves;
use crate::hermpair::{validate_pair, HermitianMatrix, HermitianPair, Tolerances, C64};
use crate::search::linspace;
use crate::solver::{find_all, lambda_bounds, mu_bound, regularity_probe, SolveOptions};
use crate::solver2x2::solve_2x2;
use io::{read_matrix_file, Storage};
use report::*;

#[derive(Debug, Parser)]
#[command(name = "twodevp", version, about = "Two-dimensional eigenvalue problems of Hermitian pairs (A, C)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Hermitian matrix A (JSON or Matrix Market)
    #[arg(long)]
    pub a: PathBuf,
    /// Hermitian indefinite matrix C
    #[arg(long)]
    pub c: PathBuf,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    /// Certification threshold on all three residuals
    #[arg(long)]
    pub tol: Option<f64>,
    /// Relative gap below which eigenvalues form one cluster
    #[arg(long)]
    pub cluster_tol: Option<f64>,
    #[arg(long)]
    pub zero_tol: Option<f64>,
}

impl TolArgs {
    fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(v) = self.tol {
            t.cert_tol = v;
        }
        if let Some(v) = self.cluster_tol {
            t.cluster_tol = v;
        }
        if let Some(v) = self.zero_tol {
            t.zero_tol = v;
        }
        t
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the sorted eigencurves of A - mu C to CSV
    Curves {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 601)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find 2D-eigentriples, bounds and regularity
    Solve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = SolveOptions::default().grid_points)]
        grid: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long, default_value_t = SolveOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SolveOptions::default().refine_tol)]
        refine_tol: f64,
        /// Scan interval LO,HI instead of the computed bound
        #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
        mu_box: Option<(f64, f64)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form solution for 2x2 pairs
    #[command(name = "solve2x2")]
    Solve2x2 {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds on mu and lambda of every 2D-eigenvalue
    Bounds {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether the 2D-spectrum is finite
    Regularity {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = SolveOptions::default().seed)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance to instability of a stable square matrix
    #[command(name = "dist2inst")]
    Dist2inst {
        #[arg(long)]
        ahat: PathBuf,
        #[arg(long, default_value_t = StabilityOptions::default().grid_points)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// min over unit x of max(x^H A x, x^H B x)
    Qcqp {
        #[arg(long)]
        a: Option<PathBuf>,
        #[arg(long)]
        b: Option<PathBuf>,
        /// Positive definite constraint matrix; use with --p1 and --p2
        #[arg(long)]
        t: Option<PathBuf>,
        #[arg(long)]
        p1: Option<PathBuf>,
        #[arg(long)]
        p2: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute residuals of a triple {"mu", "lambda", "x"}
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        triple: PathBuf,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_interval(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let parse = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        use crate::Error::*;
        match e {
            DimensionMismatch { .. }
            | NotSquare { .. }
            | Empty
            | NonFiniteEntry { .. }
            | NotHermitian { .. }
            | WrongDimension(_)
            | NonFiniteParameter(_)
            | InvalidOption(_)
            | EmptyGrid
            | InvalidGrid => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::InputError> for Failure {
    fn from(e: io::InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

fn load(path: &Path, err: &mut dyn Write) -> std::result::Result<DMatrix<C64>, Failure> {
    let l = read_matrix_file(path)?;
    if l.storage == Storage::General {
        let asym = (&l.matrix - l.matrix.adjoint()).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        if asym > 0.0 {
            let _ = writeln!(err, "warning: {}: general storage, symmetrizing (max asymmetry {asym:e})", path.display());
            return Ok(HermitianMatrix::symmetrized(&l.matrix).into_matrix());
        }
    }
    Ok(l.matrix)
}

fn load_hermitian(path: &Path, tol: &Tolerances, err: &mut dyn Write) -> std::result::Result<HermitianMatrix, Failure> {
    Ok(HermitianMatrix::new(load(path, err)?, tol.herm_tol)?)
}

fn load_pair(p: &PairArgs, tol: Tolerances, err: &mut dyn Write) -> std::result::Result<HermitianPair, Failure> {
    let a = load(&p.a, err)?;
    let c = load(&p.c, err)?;
    Ok(validate_pair(&a, &c, tol)?)
}

fn curves_csv(pair: &HermitianPair, from: f64, to: f64, points: usize) -> std::result::Result<String, Failure> {
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(Failure::Input(format!("--from must be below --to, got {from} and {to}")));
    }
    if points < 2 {
        return Err(Failure::Input(format!("--points must be at least 2, got {points}")));
    }
    let samples = sample_curves(pair, &linspace(from, to, points))?;
    let n = pair.n();
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("mu".to_string()).chain((1..=n).map(|i| format!("lambda_{i}"))).chain((1..=n).map(|i| format!("g_{i}")));
    let csv_err = |e: csv::Error| Failure::Domain(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for s in &samples {
        let row = std::iter::once(s.mu).chain(s.lambdas.iter().copied()).chain(s.gvals.iter().copied()).map(fmt17);
        w.write_record(row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of ASCII numbers"))
}

fn execute(cmd: &Command, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Curves { pair, from, to, points, .. } => {
            let p = load_pair(pair, Tolerances::default(), err)?;
            Ok((curves_csv(&p, *from, *to, *points)?, 0))
        }
        Command::Solve { pair, grid, tol, seed, refine_tol, mu_box, .. } => {
            let t = tol.tolerances();
            let p = load_pair(pair, t, err)?;
            let opts =
                SolveOptions { grid_points: *grid, refine_tol: *refine_tol, seed: *seed, mu_box: *mu_box, ..SolveOptions::default() };
            let r = find_all(&p, &opts)?;
            if !r.near_misses.is_empty() {
                let _ = writeln!(err, "note: {} candidate(s) failed certification narrowly", r.near_misses.len());
            }
            let code = if r.is_empty() {
                let _ = writeln!(err, "error: no certified 2D-eigentriple and no line family");
                3
            } else {
                0
            };
            Ok((to_json(&SolveReportFile::new(&r, &opts, &t)), code))
        }
        Command::Solve2x2 { pair, tol, .. } => {
            let p = load_pair(pair, tol.tolerances(), err)?;
            let s = solve_2x2(&p)?;
            if s.near_threshold {
                let _ = writeln!(err, "warning: |a12| is close to the diagonal-case threshold");
            }
            Ok((to_json(&TwoByTwoFile::from(&s)), 0))
        }
        Command::Bounds { pair, tol, .. } => {
            let p = load_pair(pair, tol.tolerances(), err)?;
            let opts = SolveOptions::default();
            let file = BoundsFile { tool_version: TOOL_VERSION.into(), mu_bound: mu_bound(&p)?, lambda_bounds: lambda_bounds(&p, &opts)? };
            Ok((to_json(&file), 0))
        }
        Command::Regularity { pair, seed, .. } => {
            let p = load_pair(pair, Tolerances::default(), err)?;
            let opts = SolveOptions { seed: *seed, ..SolveOptions::default() };
            Ok((to_json(&RegularityFile { tool_version: TOOL_VERSION.into(), regularity: regularity_probe(&p, &opts)? }), 0))
        }
        Command::Dist2inst { ahat, points, .. } => {
            let m = read_matrix_file(ahat)?.matrix;
            let opts = StabilityOptions { grid_points: *points, ..StabilityOptions::default() };
            let r = distance_to_instability(&m, &Tolerances::default(), &opts)?;
            Ok((to_json(&StabilityFile { tool_version: TOOL_VERSION.into(), result: r }), 0))
        }
        Command::Qcqp { a, b, t, p1, p2, .. } => {
            let tol = Tolerances::default();
            let (am, bm) = match (a, b, t, p1, p2) {
                (Some(a), Some(b), None, None, None) => (load_hermitian(a, &tol, err)?, load_hermitian(b, &tol, err)?),
                (None, None, Some(t), Some(p1), Some(p2)) => {
                    let (t, p1, p2) = (load_hermitian(t, &tol, err)?, load_hermitian(p1, &tol, err)?, load_hermitian(p2, &tol, err)?);
                    qcqp_from_constraints(&t, &p1, &p2, &tol)?
                }
                _ => return Err(Failure::Input("give either --a and --b, or --t, --p1 and --p2".into())),
            };
            let r = qcqp_minimax(&am, &bm, &tol, &SolveOptions::default())?;
            Ok((to_json(&MinimaxFile::from(&r)), 0))
        }
        Command::Verify { pair, triple, tol, .. } => {
            let t = tol.tolerances();
            let p = load_pair(pair, t, err)?;
            let text = std::fs::read_to_string(triple).map_err(|e| Failure::Input(format!("{}: {e}", triple.display())))?;
            let tj: TripleJson = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", triple.display())))?;
            let c = tj.certify(&p, &t)?;
            let code = if c.certified { 0 } else { 3 };
            Ok((to_json(&VerifyFile { tool_version: TOOL_VERSION.into(), triple: TripleJson::from(&c) }), code))
        }
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Curves { out, .. }
        | Command::Solve { out, .. }
        | Command::Solve2x2 { out, .. }
        | Command::Bounds { out, .. }
        | Command::Regularity { out, .. }
        | Command::Dist2inst { out, .. }
        | Command::Qcqp { out, .. }
        | Command::Verify { out, .. } => out.as_ref(),
    }
}

/// Runs one command, writing data to `out` (unless `--out` is given) and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command, err) {
        Ok((text, code)) => {
            let written = match out_path(&cli.command) {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(m) => {
                    let _ = writeln!(err, "error: {m}");
                    2
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
