use std::path::PathBuf;
use std::process::{Command, Output};

use twodevp::cli::report::{MinimaxFile, SolveReportFile, StabilityFile, TwoByTwoFile, VerifyFile};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twodevp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn pair_args(prefix: &str) -> (String, String) {
    (data(&format!("{prefix}_a.json")), data(&format!("{prefix}_c.json")))
}

#[test]
fn solve_writes_report_to_stdout() {
    let (a, c) = pair_args("tilted_2x2");
    let o = run(&["solve", "--a", &a, "--c", &c]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: SolveReportFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.triples.len(), 2);
    assert!(r.triples.iter().all(|t| t.certified == Some(true)));
    assert!(r.tool_version.starts_with("twodevp "));
    assert_eq!(r.options_echo.solve.grid_points, 2000);
}

#[test]
fn solve_is_deterministic_across_thread_counts() {
    let (a, c) = pair_args("crossing_4x4");
    let args = ["solve", "--a", &a, "--c", &c, "--seed", "99"];
    let one = Command::new(env!("CARGO_BIN_EXE_twodevp")).args(args).env("TWODEVP_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_twodevp")).args(args).env("TWODEVP_THREADS", "4").output().unwrap();
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, run(&args).stdout);
}

#[test]
fn out_flag_writes_file_and_leaves_stdout_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("report.json");
    let (a, c) = pair_args("line_family_3x3");
    let o = run(&["solve", "--a", &a, "--c", &c, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r: SolveReportFile = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.line_families.len(), 1);
    assert!(!r.regularity.regular);
}

#[test]
fn curves_csv_header_and_shape() {
    let (a, c) = pair_args("inflection_3x3");
    let o = run(&["curves", "--a", &a, "--c", &c, "--from", "-2", "--to", "2", "--points", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,lambda_1,lambda_2,lambda_3,g_1,g_2,g_3"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[0].starts_with("-2.0000000000000000e0,"));
    assert!(rows[4].starts_with("2.0000000000000000e0,"));
}

#[test]
fn solve2x2_and_bounds() {
    let (a, c) = pair_args("tilted_2x2");
    let o = run(&["solve2x2", "--a", &a, "--c", &c]);
    let s: TwoByTwoFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((s.triples[0].mu + 0.271_052_370_871_575).abs() < 1e-12);

    let o = run(&["bounds", "--a", &a, "--c", &c]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mu_bound"]["source"], "norm_ratio");

    let three = data("inflection_3x3_a.json");
    let o = run(&["solve2x2", "--a", &three, "--c", &three]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn regularity_reports_witness() {
    let (a, c) = pair_args("line_family_3x3");
    let o = run(&["regularity", "--a", &a, "--c", &c]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regularity"]["regular"], false);
    assert!((v["regularity"]["witness_sigma"].as_f64().unwrap() + 1.0).abs() < 1e-8);
}

#[test]
fn dist2inst_and_qcqp() {
    let o = run(&["dist2inst", "--ahat", &data("stable_4x4.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s: StabilityFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((s.result.beta - s.result.certificate).abs() < 1e-8);

    let o = run(&["qcqp", "--a", &data("qcqp_a.json"), "--b", &data("qcqp_b.json")]);
    let m: MinimaxFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((m.value - 1.5).abs() < 1e-9);

    // A and B both positive definite: T = I, P1 = A, P2 = B gives the same answer
    let o = run(&["qcqp", "--t", &data("diagonal_2x2_a.json"), "--p1", &data("qcqp_a.json"), "--p2", &data("qcqp_b.json")]);
    let m2: MinimaxFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((m2.value - m.value).abs() < 1e-12);

    let o = run(&["qcqp", "--a", &data("qcqp_a.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_round_trips_a_solved_triple() {
    let (a, c) = pair_args("tilted_2x2");
    let r: SolveReportFile = serde_json::from_str(&stdout(&run(&["solve", "--a", &a, "--c", &c]))).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, serde_json::to_string(&r.triples[0]).unwrap()).unwrap();
    let o = run(&["verify", "--a", &a, "--c", &c, "--triple", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: VerifyFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.triple.residuals, r.triples[0].residuals);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"mu": 0.5, "lambda": 1.0, "x": [[1, 0], [0, 0]]}"#).unwrap();
    let o = run(&["verify", "--a", &a, "--c", &c, "--triple", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let v: VerifyFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.triple.certified, Some(false));
}

#[test]
fn input_errors_exit_2() {
    let (a, c) = pair_args("tilted_2x2");
    assert_eq!(run(&["solve", "--a", "/nonexistent.json", "--c", &c]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--a", &a, "--c", &data("inflection_3x3_c.json")]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let asym = dir.path().join("asym.json");
    std::fs::write(&asym, r#"{"n": 2, "rows": [[1, 1], [0, 1]]}"#).unwrap();
    let o = run(&["solve", "--a", asym.to_str().unwrap(), "--c", &c]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    assert!(o.stdout.is_empty());

    let o = run(&["curves", "--a", &a, "--c", &c, "--from", "1", "--to", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let definite = dir.path().join("definite.json");
    std::fs::write(&definite, r#"{"n": 2, "rows": [[1, 0], [0, 2]]}"#).unwrap();
    let (a, _) = pair_args("tilted_2x2");
    let o = run(&["solve", "--a", &a, "--c", definite.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));

    let unstable = dir.path().join("unstable.json");
    std::fs::write(&unstable, r#"{"n": 1, "rows": [[[0.5, 1.0]]]}"#).unwrap();
    assert_eq!(run(&["dist2inst", "--ahat", unstable.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn matrix_market_general_storage_is_symmetrized_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.mtx");
    std::fs::write(&a, "%%MatrixMarket matrix coordinate complex general\n2 2 3\n1 1 1 0\n1 2 0.2 0.1\n2 2 1 0\n").unwrap();
    let (_, c) = pair_args("tilted_2x2");
    let o = run(&["solve", "--a", a.to_str().unwrap(), "--c", &c]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("warning"));

    let o = run(&["solve", "--a", &data("complex_hermitian.mtx"), "--c", &data("complex_hermitian.mtx")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).is_empty());
}

#[test]
fn version_flag() {
    let o = run(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("twodevp "));
}

#[test]
fn mu_box_override() {
    let (a, c) = pair_args("line_family_3x3");
    let o = run(&["solve", "--a", &a, "--c", &c, "--mu-box", "-4,4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: SolveReportFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.mu_box, [-4.0, 4.0]);
    assert_eq!(r.options_echo.solve.mu_box, Some((-4.0, 4.0)));
    assert_eq!(run(&["solve", "--a", &a, "--c", &c, "--mu-box", "4,-4"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--a", &a, "--c", &c, "--mu-box", "4"]).status.code(), Some(2));
}
