use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bfs::edit_distance_bfs;
use crate::dac::edit_distance_dacmm;
use crate::error::{Error, Result};
use crate::hash::{HashConfig, HashLcp};
use crate::lcp::LcpOracle;
use crate::oracle::{antidiagonal_edit_distance, dp_edit_distance, DEFAULT_CELL_CAP};
use crate::suffix::SuffixArrayIndex;

use super::threads::{resolve_threads, thread_pool};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Frontier BFS over the suffix-array LCP index.
    BfsSa,
    /// Frontier BFS over full prefix-hash tables.
    BfsH,
    /// Frontier BFS over blocked prefix-hash tables.
    BfsBh,
    /// Stripe-doubling divide and conquer.
    DacMm,
    /// Row-by-row quadratic DP.
    Dp,
    /// Wavefront quadratic DP.
    Antidiag,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::BfsSa,
        Algorithm::BfsH,
        Algorithm::BfsBh,
        Algorithm::DacMm,
        Algorithm::Dp,
        Algorithm::Antidiag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BfsSa => "bfs-sa",
            Algorithm::BfsH => "bfs-h",
            Algorithm::BfsBh => "bfs-bh",
            Algorithm::DacMm => "dac-mm",
            Algorithm::Dp => "dp",
            Algorithm::Antidiag => "antidiag",
        }
    }

    /// Whether the running time grows with `n * m` regardless of the distance.
    pub fn is_quadratic(self) -> bool {
        matches!(self, Algorithm::Dp | Algorithm::Antidiag)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "antidiagonal" => Ok(Algorithm::Antidiag),
            _ => Algorithm::ALL
                .into_iter()
                .find(|a| a.name() == s)
                .ok_or_else(|| Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Block size for `bfs-bh`.
    pub block_size: usize,
    /// Worker threads; `None` defers to `ED_NUM_THREADS`, then the hardware.
    pub threads: Option<usize>,
    pub reps: usize,
    /// Cross-check the answer against the DP oracle.
    pub verify: bool,
    /// Largest `n * m` the quadratic algorithms and the verifier accept.
    pub cell_cap: u64,
    pub hash: HashConfig,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            block_size: 32,
            threads: None,
            reps: 3,
            verify: false,
            cell_cap: DEFAULT_CELL_CAP,
            hash: HashConfig::default(),
        }
    }
}

/// Outcome of one algorithm on one input pair, taken from the median repetition.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub algo: Algorithm,
    pub n: usize,
    pub m: usize,
    /// Computed distance.
    pub k: usize,
    /// Block size, for `bfs-bh` only.
    pub block: Option<usize>,
    pub build_s: f64,
    pub query_s: f64,
    pub total_s: f64,
    pub lcp_queries: Option<usize>,
    pub frontier_total: Option<usize>,
    /// Stripe checks issued, for `dac-mm` only.
    pub checks: Option<usize>,
    pub reps: usize,
    /// Whether the timings are the median of several repetitions.
    pub median: bool,
}

#[derive(Clone, Copy, Debug)]
struct Sample {
    k: usize,
    build: f64,
    query: f64,
    total: f64,
    lcp_queries: Option<usize>,
    frontier_total: Option<usize>,
    checks: Option<usize>,
}

/// Runs `algo` on `(a, b)` `options.reps` times inside a dedicated thread pool.
pub fn run_algorithm(algo: Algorithm, a: &[u8], b: &[u8], options: &RunOptions) -> Result<RunReport> {
    if options.reps == 0 {
        return Err(Error::InvalidOption("at least one repetition is required".into()));
    }
    if options.block_size == 0 {
        return Err(Error::InvalidOption("block size must be positive".into()));
    }
    let threads = resolve_threads(options.threads)?;
    let pool = thread_pool(threads)?;
    pool.install(|| run_in_current_pool(algo, a, b, options))
}

/// As [`run_algorithm`], on whatever rayon pool the caller is in.
pub fn run_in_current_pool(algo: Algorithm, a: &[u8], b: &[u8], options: &RunOptions) -> Result<RunReport> {
    let mut samples = Vec::with_capacity(options.reps);
    for _ in 0..options.reps.max(1) {
        let s = sample(algo, a, b, options)?;
        if let Some(first) = samples.first().map(|f: &Sample| f.k) {
            if first != s.k {
                return Err(Error::UnstableResult {
                    algo: algo.name(),
                    first,
                    other: s.k,
                });
            }
        }
        samples.push(s);
    }
    if options.verify {
        let expected = dp_edit_distance(a, b, options.cell_cap)?;
        if expected != samples[0].k {
            return Err(Error::VerificationMismatch {
                algo: algo.name(),
                expected,
                got: samples[0].k,
            });
        }
    }
    samples.sort_by(|p, q| p.total.total_cmp(&q.total));
    let mid = samples[(samples.len() - 1) / 2];
    Ok(RunReport {
        algo,
        n: a.len(),
        m: b.len(),
        k: mid.k,
        block: (algo == Algorithm::BfsBh).then_some(options.block_size),
        build_s: mid.build,
        query_s: mid.query,
        total_s: mid.total,
        lcp_queries: mid.lcp_queries,
        frontier_total: mid.frontier_total,
        checks: mid.checks,
        reps: samples.len(),
        median: samples.len() > 1,
    })
}

fn sample(algo: Algorithm, a: &[u8], b: &[u8], options: &RunOptions) -> Result<Sample> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let start = Instant::now();
    match algo {
        Algorithm::BfsSa => {
            let index = SuffixArrayIndex::with_fast_path(long, short, options.hash.fast_path);
            Ok(bfs_sample(long, short, &index, start))
        }
        Algorithm::BfsH => {
            let oracle = HashLcp::with_prefix_tables(long, short, &options.hash);
            Ok(bfs_sample(long, short, &oracle, start))
        }
        Algorithm::BfsBh => {
            let oracle = HashLcp::with_blocked_tables(long, short, options.block_size, &options.hash);
            Ok(bfs_sample(long, short, &oracle, start))
        }
        Algorithm::DacMm => {
            let out = edit_distance_dacmm(a, b);
            let total = start.elapsed().as_secs_f64();
            Ok(Sample {
                k: out.distance,
                build: 0.0,
                query: total,
                total,
                lcp_queries: None,
                frontier_total: None,
                checks: Some(out.stats.checks()),
            })
        }
        Algorithm::Dp | Algorithm::Antidiag => {
            let k = if algo == Algorithm::Dp {
                dp_edit_distance(a, b, options.cell_cap)?
            } else {
                antidiagonal_edit_distance(a, b, options.cell_cap)?
            };
            let total = start.elapsed().as_secs_f64();
            Ok(Sample {
                k,
                build: 0.0,
                query: total,
                total,
                lcp_queries: None,
                frontier_total: None,
                checks: None,
            })
        }
    }
}

fn bfs_sample<O: LcpOracle>(a: &[u8], b: &[u8], oracle: &O, start: Instant) -> Sample {
    let build = start.elapsed().as_secs_f64();
    let query_start = Instant::now();
    let out = edit_distance_bfs(a, b, oracle);
    let query = query_start.elapsed().as_secs_f64();
    Sample {
        k: out.distance,
        build,
        query,
        total: start.elapsed().as_secs_f64(),
        lcp_queries: Some(out.stats.lcp_queries),
        frontier_total: Some(out.stats.frontier_total),
        checks: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn once() -> RunOptions {
        RunOptions {
            reps: 1,
            threads: Some(1),
            ..RunOptions::default()
        }
    }

    #[test]
    fn names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert_eq!("antidiagonal".parse::<Algorithm>().unwrap(), Algorithm::Antidiag);
        assert!(matches!("bfs".parse::<Algorithm>(), Err(Error::UnknownAlgorithm(_))));
    }

    #[test]
    fn dp_on_kitten() {
        let r = run_algorithm(Algorithm::Dp, b"kitten", b"sitting", &once()).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!((r.n, r.m), (6, 7));
        assert_eq!(r.block, None);
        assert!(!r.median);
    }

    #[test]
    fn unit_block_matches_full_table() {
        let a = b"the rain in spain falls mainly on the plain";
        let b = b"the rain in spin fell mainly on a plain";
        let opts = RunOptions {
            block_size: 1,
            ..once()
        };
        let h = run_algorithm(Algorithm::BfsH, a, b, &opts).unwrap();
        let bh = run_algorithm(Algorithm::BfsBh, a, b, &opts).unwrap();
        assert_eq!(h.k, bh.k);
        assert_eq!(h.lcp_queries, bh.lcp_queries);
        assert_eq!(bh.block, Some(1));
    }

    #[test]
    fn verification_and_caps() {
        let opts = RunOptions {
            verify: true,
            cell_cap: 10,
            ..once()
        };
        let err = run_algorithm(Algorithm::BfsSa, b"abcdef", b"abcxef", &opts).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let err = run_algorithm(Algorithm::Antidiag, b"abcdef", b"abcxef", &opts).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let ok = RunOptions { cell_cap: 100, ..opts };
        assert_eq!(run_algorithm(Algorithm::DacMm, b"abcdef", b"abcxef", &ok).unwrap().k, 1);
    }

    #[test]
    fn median_of_three() {
        let r = run_algorithm(Algorithm::BfsSa, b"abcdef", b"abdef", &RunOptions {
            threads: Some(2),
            ..RunOptions::default()
        })
        .unwrap();
        assert_eq!(r.reps, 3);
        assert!(r.median);
        assert!(r.total_s + 1e-9 >= r.build_s + r.query_s - 1e-3);
    }
}
