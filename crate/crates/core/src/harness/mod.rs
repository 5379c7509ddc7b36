//! Synthetic data, timed runs and CSV reports.

mod bench;
mod gen;
mod report;
mod run;
mod threads;

pub use bench::{bench_synthetic, space_table, speed_warning, BenchConfig, BenchOutcome, SpaceRow, SPACE_BLOCKS};
pub use gen::{generate_edits, GenSpec};
pub use report::{append_csv, emit_csv, read_csv, write_csv, CSV_HEADER};
pub use run::{run_algorithm, run_in_current_pool, Algorithm, RunOptions, RunReport};
pub use threads::{resolve_threads, thread_pool, THREADS_ENV};
