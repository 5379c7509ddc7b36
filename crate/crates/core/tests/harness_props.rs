use edist::harness::{generate_edits, read_csv, run_algorithm, write_csv, Algorithm, GenSpec, RunOptions, RunReport};
use edist::oracle::{dp_edit_distance, DEFAULT_CELL_CAP};
use proptest::prelude::*;

fn once() -> RunOptions {
    RunOptions {
        reps: 1,
        threads: Some(1),
        ..RunOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_pairs_are_reproducible_and_close((n, k) in (1usize..400).prop_flat_map(|n| (Just(n), 0..=n.min(40))), sigma in prop::sample::select(vec![2usize, 4, 20, 256]), seed: u64) {
        let spec = GenSpec { n, k, sigma, seed };
        let (a, b) = generate_edits(&spec).unwrap();
        let again = generate_edits(&spec).unwrap();
        prop_assert_eq!(a.bytes(), again.0.bytes());
        prop_assert_eq!(b.bytes(), again.1.bytes());
        prop_assert_eq!(a.len(), n);
        prop_assert!(a.alphabet_size() <= sigma);
        let d = dp_edit_distance(a.bytes(), b.bytes(), DEFAULT_CELL_CAP).unwrap();
        prop_assert!(d <= k.min(n));
    }

    #[test]
    fn block_size_never_changes_the_answer(n in 50usize..600, k in 0usize..30usize, seed: u64, block in prop::sample::select(vec![1usize, 2, 4, 8, 16, 32, 64])) {
        let (a, b) = generate_edits(&GenSpec { n, k, sigma: 4, seed }).unwrap();
        let full = run_algorithm(Algorithm::BfsH, a.bytes(), b.bytes(), &once()).unwrap();
        let opts = RunOptions { block_size: block, ..once() };
        let blocked = run_algorithm(Algorithm::BfsBh, a.bytes(), b.bytes(), &opts).unwrap();
        prop_assert_eq!(blocked.k, full.k);
        prop_assert_eq!(blocked.lcp_queries, full.lcp_queries);
        prop_assert_eq!(blocked.frontier_total, full.frontier_total);
    }

    #[test]
    fn csv_round_trip(rows in prop::collection::vec((0usize..6, 0usize..1_000_000, 0usize..1000, 0u32..100_000, any::<bool>()), 0..8)) {
        let reports: Vec<RunReport> = rows
            .into_iter()
            .map(|(algo, n, k, micros, flag)| {
                let algo = Algorithm::ALL[algo];
                let secs = micros as f64 / 1e6;
                RunReport {
                    algo,
                    n,
                    m: n + 1,
                    k,
                    block: (algo == Algorithm::BfsBh).then_some(16),
                    build_s: secs,
                    query_s: secs,
                    total_s: 2.0 * secs,
                    lcp_queries: flag.then_some(k * 3),
                    frontier_total: flag.then_some(k * k),
                    checks: (algo == Algorithm::DacMm).then_some(4),
                    reps: 3,
                    median: true,
                }
            })
            .collect();
        let mut buf = Vec::new();
        write_csv(&reports, &mut buf).unwrap();
        prop_assert_eq!(read_csv(buf.as_slice()).unwrap(), reports);
    }
}
