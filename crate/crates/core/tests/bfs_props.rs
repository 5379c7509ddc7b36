use edist::bfs::{bfs_edit_distance, edit_distance_bfs_with, LcpBackend, DEFAULT_GRAIN};
use edist::hash::{HashConfig, HashLcp};
use edist::oracle::{dp_edit_distance, DEFAULT_CELL_CAP};
use edist::suffix::SuffixArrayIndex;
use edist::{LcpOracle, NaiveLcp};
use proptest::prelude::*;

const BACKENDS: [LcpBackend; 4] = [
    LcpBackend::SuffixArray,
    LcpBackend::PrefixHash,
    LcpBackend::BlockedHash { block: 1 },
    LcpBackend::BlockedHash { block: 7 },
];

fn pair(max: usize) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    prop::sample::select(vec![2u8, 4, 255]).prop_flat_map(move |sigma| {
        (
            prop::collection::vec(1..=sigma, 0..max),
            prop::collection::vec(1..=sigma, 0..max),
        )
    })
}

/// A base string and a lightly edited copy, so the distance stays small.
fn near_pair() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    (prop::collection::vec(1u8..=4, 1..400), prop::collection::vec((any::<prop::sample::Index>(), 0u8..3, 1u8..=4), 0..12))
        .prop_map(|(a, edits)| {
            let mut b = a.clone();
            for (at, kind, c) in edits {
                let at = at.index(b.len() + 1);
                match kind {
                    0 => b.insert(at, c),
                    1 if at < b.len() => {
                        b.remove(at);
                    }
                    _ if at < b.len() => b[at] = c,
                    _ => {}
                }
            }
            (a, b)
        })
}

type Trace = Vec<(usize, isize, Vec<isize>)>;

fn trace<O: LcpOracle>(a: &[u8], b: &[u8], oracle: &O, grain: usize) -> (usize, Trace) {
    let mut rounds = Vec::new();
    let out = edit_distance_bfs_with(a, b, oracle, grain, |f| rounds.push((f.round, f.lo, f.rows.to_vec())));
    (out.distance, rounds)
}

proptest! {
    #[test]
    fn every_backend_matches_dp((a, b) in pair(200)) {
        let k = dp_edit_distance(&a, &b, DEFAULT_CELL_CAP).unwrap();
        for backend in BACKENDS {
            let out = bfs_edit_distance(&a, &b, backend, &HashConfig::default());
            prop_assert_eq!(out.distance, k, "{:?}", backend);
        }
    }

    #[test]
    fn small_distances_match_dp((a, b) in near_pair()) {
        let k = dp_edit_distance(&a, &b, DEFAULT_CELL_CAP).unwrap();
        for backend in BACKENDS {
            prop_assert_eq!(bfs_edit_distance(&a, &b, backend, &HashConfig::default()).distance, k);
        }
    }

    #[test]
    fn frontiers_do_not_depend_on_the_backend((a, b) in near_pair(), fast_path in 0usize..9, grain in prop::sample::select(vec![1usize, 3, DEFAULT_GRAIN])) {
        let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let cfg = HashConfig { fast_path, ..HashConfig::default() };
        let reference = trace(&a, &b, &NaiveLcp::new(&a, &b), DEFAULT_GRAIN);
        prop_assert_eq!(&trace(&a, &b, &SuffixArrayIndex::with_fast_path(&a, &b, fast_path), grain), &reference);
        prop_assert_eq!(&trace(&a, &b, &HashLcp::with_prefix_tables(&a, &b, &cfg), grain), &reference);
        prop_assert_eq!(&trace(&a, &b, &HashLcp::with_blocked_tables(&a, &b, 4, &cfg), grain), &reference);
    }

    #[test]
    fn bounds_and_symmetry((a, b) in pair(120)) {
        let cfg = HashConfig::default();
        let k = bfs_edit_distance(&a, &b, LcpBackend::PrefixHash, &cfg).distance;
        prop_assert!(k >= a.len().abs_diff(b.len()));
        prop_assert!(k <= a.len().max(b.len()));
        prop_assert_eq!(k == 0, a == b);
        prop_assert_eq!(bfs_edit_distance(&b, &a, LcpBackend::SuffixArray, &cfg).distance, k);
    }

    #[test]
    fn frontiers_only_move_forward((a, b) in near_pair()) {
        let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let (_, rounds) = trace(&a, &b, &NaiveLcp::new(&a, &b), DEFAULT_GRAIN);
        for pair in rounds.windows(2) {
            let (prev, cur) = (&pair[0], &pair[1]);
            prop_assert_eq!(cur.0, prev.0 + 1);
            for (k, &x) in prev.2.iter().enumerate() {
                let diag = prev.1 + k as isize;
                if x < 0 || diag < cur.1 {
                    continue;
                }
                let after = cur.2[(diag - cur.1) as usize];
                prop_assert!(after >= x, "diagonal {} fell back from {} to {}", diag, x, after);
            }
        }
    }
}

#[test]
fn substitutions_fill_the_frontier_box() {
    let a: Vec<u8> = (0..300).map(|i| b"acgt"[i % 4]).collect();
    for k in [1usize, 5, 20] {
        let mut b = a.clone();
        for e in 0..k {
            let at = 7 + e * 13;
            b[at] = if b[at] == b'z' { b'y' } else { b'z' };
        }
        let out = bfs_edit_distance(&a, &b, LcpBackend::SuffixArray, &HashConfig::default());
        assert_eq!(out.distance, k);
        assert!(out.stats.frontier_total <= (k + 1) * (k + 1));
    }
}
