use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hash::{BlockedHashTable, HashParams, PrefixHashes, MERSENNE_61};

use super::gen::{generate_edits, GenSpec};
use super::run::{run_in_current_pool, Algorithm, RunOptions, RunReport};
use super::threads::{resolve_threads, thread_pool};

/// A grid of synthetic instances, every algorithm run on each.
#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub k_list: Vec<usize>,
    pub sigma: usize,
    pub seed: u64,
    pub algos: Vec<Algorithm>,
    pub options: RunOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_list: vec![10_000],
            k_list: vec![10, 100],
            sigma: 256,
            seed: 42,
            algos: Algorithm::ALL.to_vec(),
            options: RunOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchOutcome {
    pub reports: Vec<RunReport>,
    /// Skipped runs and performance regressions worth flagging.
    pub warnings: Vec<String>,
}

/// Runs the synthetic grid. Quadratic algorithms are skipped on instances above the cell cap.
///
/// Every algorithm must agree on the distance of each instance.
pub fn bench_synthetic(config: &BenchConfig) -> Result<BenchOutcome> {
    let pool = thread_pool(resolve_threads(config.options.threads)?)?;
    pool.install(|| {
        let mut outcome = BenchOutcome::default();
        for &n in &config.n_list {
            for &k in &config.k_list {
                if k > n {
                    outcome.warnings.push(format!("skipped n={n} k={k}: k exceeds n"));
                    continue;
                }
                let spec = GenSpec {
                    n,
                    k,
                    sigma: config.sigma,
                    seed: config.seed ^ (n as u64).rotate_left(20) ^ k as u64,
                };
                let (a, b) = generate_edits(&spec)?;
                let (a, b) = (a.bytes(), b.bytes());
                let cells = a.len() as u128 * b.len() as u128;
                let mut row: Vec<RunReport> = Vec::new();
                for &algo in &config.algos {
                    if algo.is_quadratic() && cells > config.options.cell_cap as u128 {
                        outcome
                            .warnings
                            .push(format!("skipped {algo} at n={n} k={k}: {cells} cells exceed the cap"));
                        continue;
                    }
                    let report = run_in_current_pool(algo, a, b, &config.options)?;
                    if let Some(first) = row.first() {
                        if first.k != report.k {
                            return Err(Error::VerificationMismatch {
                                algo: algo.name(),
                                expected: first.k,
                                got: report.k,
                            });
                        }
                    }
                    row.push(report);
                }
                if let Some(w) = speed_warning(&row) {
                    outcome.warnings.push(w);
                }
                outcome.reports.extend(row);
            }
        }
        Ok(outcome)
    })
}

/// `WARN` line when `bfs-h` is not faster than the wavefront DP on the same instance.
pub fn speed_warning(row: &[RunReport]) -> Option<String> {
    let find = |algo| row.iter().find(|r| r.algo == algo);
    let (h, wave) = (find(Algorithm::BfsH)?, find(Algorithm::Antidiag)?);
    (h.total_s >= wave.total_s).then(|| {
        format!(
            "WARN bfs-h ({:.6} s) not faster than antidiag ({:.6} s) at n={} m={} k={}",
            h.total_s, wave.total_s, h.n, h.m, h.k
        )
    })
}

/// Auxiliary storage of a blocked hash table for one block size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpaceRow {
    pub block: usize,
    /// Words actually held by the table.
    pub words: usize,
    /// `floor(n / block) + 1`.
    pub expected: usize,
    /// `words` relative to the full prefix table's `n + 1`.
    pub ratio: f64,
}

/// Builds a blocked table over a random length-`n` sequence for each block size.
pub fn space_table(n: usize, blocks: &[usize], seed: u64) -> Vec<SpaceRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<u8> = (0..n).map(|_| rng.gen()).collect();
    let params = HashParams::seeded(seed, MERSENNE_61, n);
    blocks
        .iter()
        .map(|&block| {
            let words = BlockedHashTable::build(&seq, block, &params).aux_words();
            SpaceRow {
                block,
                words,
                expected: n / block + 1,
                ratio: words as f64 / (n + 1) as f64,
            }
        })
        .collect()
}

/// Powers of two from 1 to 64.
pub const SPACE_BLOCKS: [usize; 7] = [1, 2, 4, 8, 16, 32, 64];
