//! Landau-Vishkin frontier BFS over the implicit edit-distance DAG.
//!
//! Cells `(x, y)` of the `(n+1) x (m+1)` grid lie on diagonals `i = x - y`.
//! Round `t` keeps, for every diagonal `i` in `[-t, t]`, the largest row
//! `f_t[i]` reachable with `t` edits, after sliding along free matches with one
//! LCP query. The search stops once the target diagonal `n - m` reaches row `n`.

use rayon::prelude::*;

use crate::hash::{HashConfig, HashLcp};
use crate::lcp::LcpOracle;
use crate::suffix::SuffixArrayIndex;

/// Marker for a diagonal with no reachable cell; any real row beats it.
pub const UNREACHED: isize = -1;

/// Frontiers at least this wide are processed in parallel.
pub const DEFAULT_GRAIN: usize = 512;

/// Predecessor moves `(dx, dy)`: insertion, deletion, substitution.
const MOVES: [(isize, isize); 3] = [(0, 1), (1, 0), (1, 1)];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BfsStats {
    /// Rounds executed after the initial frontier.
    pub rounds: usize,
    /// Diagonal entries processed across all frontiers, the initial one included.
    pub frontier_total: usize,
    pub lcp_queries: usize,
    /// Sum of all LCP lengths returned.
    pub lcp_total: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsOutcome {
    pub distance: usize,
    pub stats: BfsStats,
}

/// One frontier as seen by an observer.
#[derive(Clone, Copy, Debug)]
pub struct FrontierView<'f> {
    pub round: usize,
    /// Diagonal stored at `rows[0]`.
    pub lo: isize,
    pub rows: &'f [isize],
}

impl FrontierView<'_> {
    pub fn hi(&self) -> isize {
        self.lo + self.rows.len() as isize - 1
    }

    /// Row reached on `diagonal`, if it is in range and reached.
    pub fn get(&self, diagonal: isize) -> Option<usize> {
        if diagonal < self.lo || diagonal > self.hi() {
            return None;
        }
        let x = self.rows[(diagonal - self.lo) as usize];
        (x != UNREACHED).then_some(x as usize)
    }
}

/// Edit distance of `a` and `b`, with `oracle` answering LCP queries on the same pair.
pub fn edit_distance_bfs<O: LcpOracle>(a: &[u8], b: &[u8], oracle: &O) -> BfsOutcome {
    edit_distance_bfs_with(a, b, oracle, DEFAULT_GRAIN, |_| {})
}

/// As [`edit_distance_bfs`], with an explicit parallel grain and a per-round observer.
pub fn edit_distance_bfs_with<O, F>(a: &[u8], b: &[u8], oracle: &O, grain: usize, mut observe: F) -> BfsOutcome
where
    O: LcpOracle,
    F: FnMut(FrontierView<'_>),
{
    let (n, m) = (a.len() as isize, b.len() as isize);
    let mut stats = BfsStats::default();
    if n == 0 || m == 0 {
        return BfsOutcome {
            distance: n.max(m) as usize,
            stats,
        };
    }

    let start = oracle.lcp(0, 0);
    stats.lcp_queries = 1;
    stats.lcp_total = start;
    stats.frontier_total = 1;

    let mut prev: Vec<isize> = vec![start as isize];
    let mut cur: Vec<isize> = Vec::new();
    let (mut prev_lo, mut prev_hi) = (0isize, 0isize);
    observe(FrontierView {
        round: 0,
        lo: 0,
        rows: &prev,
    });
    if n == m && start as isize == n {
        return BfsOutcome { distance: 0, stats };
    }

    let target = n - m;
    let mut t: isize = 0;
    loop {
        t += 1;
        let lo = (-t).max(-m);
        let hi = t.min(n);
        cur.clear();
        cur.resize((hi - lo + 1) as usize, UNREACHED);

        let prev_ref = &prev;
        let at_prev = |j: isize| {
            if j < prev_lo || j > prev_hi {
                UNREACHED
            } else {
                prev_ref[(j - prev_lo) as usize]
            }
        };
        let step = |k: usize| -> (isize, usize, usize) {
            let i = lo + k as isize;
            let mut best = at_prev(i);
            let (mut queries, mut total) = (0, 0);
            for (dx, dy) in MOVES {
                let from = at_prev(i - dx + dy);
                if from == UNREACHED {
                    continue;
                }
                let x = from + dx;
                let y = x - i;
                if x > n || y > m {
                    continue;
                }
                let run = oracle.lcp(x as usize, y as usize);
                queries += 1;
                total += run;
                best = best.max(x + run as isize);
            }
            (best, queries, total)
        };

        let (queries, total) = if cur.len() >= grain {
            cur.par_iter_mut()
                .enumerate()
                .map(|(k, slot)| {
                    let (x, q, s) = step(k);
                    *slot = x;
                    (q, s)
                })
                .reduce(|| (0, 0), |p, q| (p.0 + q.0, p.1 + q.1))
        } else {
            let mut acc = (0, 0);
            for (k, slot) in cur.iter_mut().enumerate() {
                let (x, q, s) = step(k);
                *slot = x;
                acc = (acc.0 + q, acc.1 + s);
            }
            acc
        };

        stats.rounds += 1;
        stats.frontier_total += cur.len();
        stats.lcp_queries += queries;
        stats.lcp_total += total;
        observe(FrontierView {
            round: t as usize,
            lo,
            rows: &cur,
        });

        if (lo..=hi).contains(&target) && cur[(target - lo) as usize] == n {
            return BfsOutcome {
                distance: t as usize,
                stats,
            };
        }
        std::mem::swap(&mut prev, &mut cur);
        prev_lo = lo;
        prev_hi = hi;
    }
}

/// Which LCP structure backs the BFS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcpBackend {
    SuffixArray,
    PrefixHash,
    BlockedHash { block: usize },
}

/// Builds the chosen LCP structure and runs the BFS with the longer sequence as `A`.
pub fn bfs_edit_distance(a: &[u8], b: &[u8], backend: LcpBackend, config: &HashConfig) -> BfsOutcome {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    match backend {
        LcpBackend::SuffixArray => {
            let index = SuffixArrayIndex::with_fast_path(a, b, config.fast_path);
            edit_distance_bfs(a, b, &index)
        }
        LcpBackend::PrefixHash => edit_distance_bfs(a, b, &HashLcp::with_prefix_tables(a, b, config)),
        LcpBackend::BlockedHash { block } => {
            edit_distance_bfs(a, b, &HashLcp::with_blocked_tables(a, b, block, config))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcp::NaiveLcp;
    use crate::oracle::{dp_edit_distance, DEFAULT_CELL_CAP};

    fn naive(a: &[u8], b: &[u8]) -> BfsOutcome {
        edit_distance_bfs(a, b, &NaiveLcp::new(a, b))
    }

    #[test]
    fn kitten_sitting() {
        assert_eq!(naive(b"sitting", b"kitten").distance, 3);
        assert_eq!(naive(b"kitten", b"sitting").distance, 3);
    }

    #[test]
    fn identical_inputs_skip_the_loop() {
        let out = naive(b"same text", b"same text");
        assert_eq!(out.distance, 0);
        assert_eq!(out.stats.rounds, 0);
        assert_eq!(out.stats.frontier_total, 1);
    }

    #[test]
    fn one_substitution_trace() {
        let (a, b) = (b"abc".as_slice(), b"abd".as_slice());
        let mut frontiers = Vec::new();
        let out = edit_distance_bfs_with(a, b, &NaiveLcp::new(a, b), DEFAULT_GRAIN, |f| {
            frontiers.push((f.round, f.get(0)));
        });
        assert_eq!(out.distance, 1);
        assert_eq!(frontiers, [(0, Some(2)), (1, Some(3))]);
    }

    #[test]
    fn empty_side() {
        let out = naive(b"abc", b"");
        assert_eq!(out.distance, 3);
        assert_eq!(out.stats.rounds, 0);
        assert_eq!(naive(b"", b"").distance, 0);
        assert_eq!(naive(b"", b"xy").distance, 2);
    }

    #[test]
    fn frontier_total_is_square_without_clipping() {
        let a = b"the quick brown fox jumps over the lazy dog";
        let b = b"the quack brown fix jumps ovr the lazy dogs";
        let out = naive(a, b);
        assert_eq!(out.distance, dp_edit_distance(a, b, DEFAULT_CELL_CAP).unwrap());
        assert_eq!(out.stats.frontier_total, (out.distance + 1).pow(2));
    }

    #[test]
    fn parallel_grain_does_not_change_results() {
        let a: Vec<u8> = (0..3000u32).map(|i| (i * 7 % 13) as u8).collect();
        let mut b = a.clone();
        for p in (0..2900).step_by(97) {
            b[p] ^= 0x20;
        }
        let oracle = NaiveLcp::new(&a, &b);
        let seq = edit_distance_bfs_with(&a, &b, &oracle, usize::MAX, |_| {});
        let par = edit_distance_bfs_with(&a, &b, &oracle, 1, |_| {});
        assert_eq!(seq, par);
    }

    #[test]
    fn frontiers_are_monotone() {
        let a = b"GATTACAGATTACACCGT";
        let b = b"GCATGCTTACAGATCACGT";
        let mut last: Option<(isize, Vec<isize>)> = None;
        edit_distance_bfs_with(a, b, &NaiveLcp::new(a, b), DEFAULT_GRAIN, |f| {
            if let Some((lo, rows)) = &last {
                for (k, &x) in rows.iter().enumerate() {
                    let d = lo + k as isize;
                    if x != UNREACHED {
                        assert!(f.get(d).unwrap() as isize >= x);
                    }
                }
            }
            last = Some((f.lo, f.rows.to_vec()));
        });
    }
}
