use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edist::harness::{
    append_csv, bench_synthetic, emit_csv, generate_edits, run_algorithm, space_table, write_csv, Algorithm,
    BenchConfig, GenSpec, RunOptions, SPACE_BLOCKS,
};
use edist::sequence::load_sequence;
use edist::Error;

/// Output-sensitive edit distance: generate inputs, run one algorithm, or benchmark a grid.
#[derive(Parser)]
#[command(name = "edist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random sequence and a copy carrying k random edits.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_a: PathBuf,
        #[arg(long)]
        out_b: PathBuf,
    },
    /// Compute the distance between two files.
    Run {
        #[arg(long, value_parser = parse_algo)]
        algo: Algorithm,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Append the report to this CSV file instead of printing it.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Time every algorithm over a grid of synthetic instances.
    Bench {
        #[arg(long, value_enum, default_value_t = Suite::Synthetic)]
        suite: Suite,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        k_list: Vec<usize>,
        #[arg(long, default_value_t = 256)]
        sigma: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated subset of algorithms.
        #[arg(long, value_delimiter = ',', value_parser = parse_algo)]
        algos: Vec<Algorithm>,
        /// Sequence length for the block-size space table; 0 skips it.
        #[arg(long, default_value_t = 1_000_000)]
        space_n: usize,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, default_value_t = 32)]
    block_size: usize,
    /// Worker threads; overrides ED_NUM_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Cross-check every answer against the DP oracle.
    #[arg(long)]
    verify: bool,
    /// Largest n*m accepted by the quadratic algorithms and the verifier.
    #[arg(long, default_value_t = edist::oracle::DEFAULT_CELL_CAP)]
    cell_cap: u64,
}

impl Common {
    fn options(&self) -> RunOptions {
        RunOptions {
            block_size: self.block_size,
            threads: self.threads,
            reps: self.reps,
            verify: self.verify,
            cell_cap: self.cell_cap,
            ..RunOptions::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Synthetic,
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("edist: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(command: Command) -> Result<(), Error> {
    match command {
        Command::Gen {
            n,
            k,
            sigma,
            seed,
            out_a,
            out_b,
        } => {
            let (a, b) = generate_edits(&GenSpec { n, k, sigma, seed })?;
            std::fs::write(&out_a, a.bytes()).map_err(|e| io(&out_a, e))?;
            std::fs::write(&out_b, b.bytes()).map_err(|e| io(&out_b, e))?;
            println!("n={} m={} sigma={sigma} seed={seed} requested_k={k}", a.len(), b.len());
            Ok(())
        }
        Command::Run {
            algo,
            a,
            b,
            common,
            csv,
        } => {
            let a = load_sequence(&a, None)?;
            let b = load_sequence(&b, None)?;
            let report = run_algorithm(algo, a.bytes(), b.bytes(), &common.options())?;
            match csv {
                Some(path) => {
                    append_csv(std::slice::from_ref(&report), &path)?;
                    println!("{} k={} total_s={:.6}", report.algo, report.k, report.total_s);
                }
                None => write_csv(&[report], std::io::stdout().lock())?,
            }
            Ok(())
        }
        Command::Bench {
            suite: Suite::Synthetic,
            n_list,
            k_list,
            sigma,
            seed,
            algos,
            space_n,
            common,
            csv,
        } => {
            let config = BenchConfig {
                n_list,
                k_list,
                sigma,
                seed,
                algos: if algos.is_empty() { Algorithm::ALL.to_vec() } else { algos },
                options: common.options(),
            };
            let outcome = bench_synthetic(&config)?;
            emit_csv(&outcome.reports, &csv)?;
            for r in &outcome.reports {
                println!("{:<8} n={:<9} m={:<9} k={:<7} total_s={:.6}", r.algo.name(), r.n, r.m, r.k, r.total_s);
            }
            for w in &outcome.warnings {
                eprintln!("{w}");
            }
            if space_n > 0 {
                println!("block  words       expected    ratio");
                for row in space_table(space_n, &SPACE_BLOCKS, seed) {
                    println!("{:<6} {:<11} {:<11} {:.6}", row.block, row.words, row.expected, row.ratio);
                }
            }
            Ok(())
        }
    }
}

fn io(path: &std::path::Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}
