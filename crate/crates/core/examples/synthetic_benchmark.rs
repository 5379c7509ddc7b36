//! A small benchmark grid, written as CSV to stdout.
//!
//! `cargo run --release --example synthetic_benchmark -- 100000 10,100`

use edist::harness::{bench_synthetic, write_csv, Algorithm, BenchConfig, RunOptions};

fn list(arg: Option<String>, default: &str) -> Vec<usize> {
    arg.as_deref()
        .unwrap_or(default)
        .split(',')
        .map(|s| s.trim().parse().expect("comma-separated integers"))
        .collect()
}

fn main() -> edist::Result<()> {
    let mut args = std::env::args().skip(1);
    let config = BenchConfig {
        n_list: list(args.next(), "5000"),
        k_list: list(args.next(), "10,100"),
        sigma: 4,
        seed: 42,
        algos: Algorithm::ALL.to_vec(),
        options: RunOptions {
            reps: 3,
            ..RunOptions::default()
        },
    };
    let outcome = bench_synthetic(&config)?;
    write_csv(&outcome.reports, std::io::stdout().lock())?;
    for w in outcome.warnings {
        eprintln!("{w}");
    }
    Ok(())
}
