//! Suffix array, LCP array and range-minimum index over `A · 0 · B`.
//!
//! The LCP of `A[i..]` and `B[j..]` is the minimum LCP-array entry between the
//! ranks of the two suffixes in the concatenation. The single 0 separator
//! (every real symbol is rank-compressed to `1..=σ`) keeps matches from running
//! across the A/B boundary.

mod dc3;
mod kasai;
mod rmq;

pub use dc3::{inverse, suffix_array};
pub use kasai::lcp_array;
pub use rmq::SparseTable;

use crate::lcp::{leading_scan, LcpOracle};

/// Default number of leading symbols compared before falling back to the RMQ.
pub const DEFAULT_FAST_PATH: usize = 8;

#[derive(Clone, Debug)]
pub struct SuffixArrayIndex<'s> {
    a: &'s [u8],
    b: &'s [u8],
    concat: Vec<u32>,
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<u32>,
    rmq: SparseTable,
    fast_path: usize,
}

impl<'s> SuffixArrayIndex<'s> {
    pub fn new(a: &'s [u8], b: &'s [u8]) -> Self {
        Self::with_fast_path(a, b, DEFAULT_FAST_PATH)
    }

    /// `fast_path = 0` sends every query straight to the RMQ.
    pub fn with_fast_path(a: &'s [u8], b: &'s [u8], fast_path: usize) -> Self {
        let concat = concat_codes(a, b);
        let sa = suffix_array(&concat).expect("concatenation holds exactly one separator");
        let rank = inverse(&sa);
        let lcp = lcp_array(&concat, &sa, &rank);
        let rmq = SparseTable::build(&lcp);
        Self {
            a,
            b,
            concat,
            sa,
            rank,
            lcp,
            rmq,
            fast_path,
        }
    }

    /// Rank-compressed `A · 0 · B`.
    pub fn concat(&self) -> &[u32] {
        &self.concat
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    pub fn rmq(&self) -> &SparseTable {
        &self.rmq
    }

    /// LCP of `a[i..]` and `b[j..]` (0-based, `i <= n`, `j <= m`).
    pub fn lcp_sa(&self, i: usize, j: usize) -> usize {
        let (n, m) = (self.a.len(), self.b.len());
        if i >= n || j >= m {
            return 0;
        }
        if self.fast_path > 0 {
            if let Some(len) = leading_scan(&self.a[i..], &self.b[j..], self.fast_path) {
                return len;
            }
        }
        self.lcp_by_rank(i, n + 1 + j)
    }

    fn lcp_by_rank(&self, p: usize, q: usize) -> usize {
        let (ra, rb) = (self.rank[p], self.rank[q]);
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.rmq.between_ranks(lo, hi) as usize
    }
}

impl LcpOracle for SuffixArrayIndex<'_> {
    #[inline]
    fn lcp(&self, i: usize, j: usize) -> usize {
        self.lcp_sa(i, j)
    }
}

/// Maps the bytes present in either input onto `1..=σ` by rank and lays out `A · 0 · B`.
fn concat_codes(a: &[u8], b: &[u8]) -> Vec<u32> {
    let mut present = [false; 256];
    for &c in a.iter().chain(b) {
        present[c as usize] = true;
    }
    let mut code = [0u32; 256];
    let mut next = 0;
    for (byte, &seen) in present.iter().enumerate() {
        if seen {
            next += 1;
            code[byte] = next;
        }
    }
    let mut out = Vec::with_capacity(a.len() + b.len() + 1);
    out.extend(a.iter().map(|&c| code[c as usize]));
    out.push(0);
    out.extend(b.iter().map(|&c| code[c as usize]));
    out
}
