//! Output-sensitive edit distance with each LCP backend, plus a peek at the frontiers.

use edist::bfs::{bfs_edit_distance, edit_distance_bfs_with, LcpBackend, DEFAULT_GRAIN};
use edist::hash::HashConfig;
use edist::harness::{generate_edits, GenSpec};
use edist::NaiveLcp;

fn main() {
    let a = b"intention";
    let b = b"execution";
    let oracle = NaiveLcp::new(a, b);
    let out = edit_distance_bfs_with(a, b, &oracle, DEFAULT_GRAIN, |f| {
        let cells: Vec<String> = f
            .rows
            .iter()
            .map(|&x| if x < 0 { ".".into() } else { x.to_string() })
            .collect();
        println!("round {:>2}  diagonals {:>3}..={:<3} rows [{}]", f.round, f.lo, f.hi(), cells.join(" "));
    });
    println!("intention -> execution: distance {}\n", out.distance);

    let (x, y) = generate_edits(&GenSpec {
        n: 200_000,
        k: 300,
        sigma: 4,
        seed: 1,
    })
    .expect("valid spec");
    let cfg = HashConfig::default();
    for backend in [
        LcpBackend::SuffixArray,
        LcpBackend::PrefixHash,
        LcpBackend::BlockedHash { block: 32 },
    ] {
        let start = std::time::Instant::now();
        let out = bfs_edit_distance(x.bytes(), y.bytes(), backend, &cfg);
        println!(
            "{:<28} k = {:<4} rounds = {:<4} lcp queries = {:<8} {:.3?}",
            format!("{backend:?}"),
            out.distance,
            out.stats.rounds,
            out.stats.lcp_queries,
            start.elapsed()
        );
    }
}
