use clap::Parser;
use twodevp::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    // TWODEVP_THREADS caps the worker pool; 0 or unset leaves it automatic
    if let Some(n) = std::env::var("TWODEVP_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let code = run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
