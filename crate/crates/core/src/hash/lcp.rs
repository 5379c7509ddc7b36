use super::{BlockedHashTable, HashParams, PrefixHashTable, PrefixHashes, MERSENNE_61, SECONDARY_MODULUS};
use crate::lcp::{leading_scan, LcpOracle};

/// Fingerprint configuration shared by both hash-based LCP backends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HashConfig {
    /// Seed for drawing the base of every lane.
    pub seed: u64,
    /// Adds a second, independent (base, modulus) lane; both must agree for a match.
    pub dual: bool,
    /// Leading symbols compared directly before any fingerprint probe. 0 disables.
    pub fast_path: usize,
}

impl Default for HashConfig {
    fn default() -> Self {
        Self {
            seed: 0x00ed_15ca_7e5e_ed00,
            dual: false,
            fast_path: 8,
        }
    }
}

#[derive(Clone, Debug)]
struct Lane<T> {
    params: HashParams,
    table_a: T,
    table_b: T,
}

/// LCP oracle answering queries by dual binary search over fingerprints.
#[derive(Clone, Debug)]
pub struct HashLcp<'s, T> {
    a: &'s [u8],
    b: &'s [u8],
    lanes: Vec<Lane<T>>,
    fast_path: usize,
}

impl<'s> HashLcp<'s, PrefixHashTable> {
    /// One fingerprint per prefix: `O(n)` words, `O(log L)` work per query.
    pub fn with_prefix_tables(a: &'s [u8], b: &'s [u8], config: &HashConfig) -> Self {
        Self::build_with(a, b, config, PrefixHashTable::build)
    }
}

impl<'s> HashLcp<'s, BlockedHashTable> {
    /// One fingerprint per block: `O(n / block)` words, `O(block * log L)` work per query.
    pub fn with_blocked_tables(a: &'s [u8], b: &'s [u8], block: usize, config: &HashConfig) -> Self {
        Self::build_with(a, b, config, |seq, params| BlockedHashTable::build(seq, block, params))
    }
}

impl<'s, T: PrefixHashes> HashLcp<'s, T> {
    fn build_with<F>(a: &'s [u8], b: &'s [u8], config: &HashConfig, make: F) -> Self
    where
        F: Fn(&[u8], &HashParams) -> T + Sync,
    {
        let max_len = a.len().max(b.len());
        let mut params = vec![HashParams::seeded(config.seed, MERSENNE_61, max_len)];
        if config.dual {
            params.push(HashParams::seeded(
                config.seed.rotate_left(32) ^ 0x9e37_79b9_7f4a_7c15,
                SECONDARY_MODULUS,
                max_len,
            ));
        }
        let lanes = params
            .into_iter()
            .map(|params| {
                let (table_a, table_b) = rayon::join(|| make(a, &params), || make(b, &params));
                Lane {
                    params,
                    table_a,
                    table_b,
                }
            })
            .collect();
        Self {
            a,
            b,
            lanes,
            fast_path: config.fast_path,
        }
    }

    /// Whether `a[i..i + len]` and `b[j..j + len]` have equal fingerprints in every lane.
    pub fn compare(&self, i: usize, j: usize, len: usize) -> bool {
        self.lanes.iter().all(|lane| {
            lane.table_a.range_hash(self.a, &lane.params, i, len)
                == lane.table_b.range_hash(self.b, &lane.params, j, len)
        })
    }

    /// LCP length together with the number of fingerprint comparisons issued.
    pub fn lcp_counted(&self, i: usize, j: usize) -> (usize, usize) {
        let max = (self.a.len() - i).min(self.b.len() - j);
        let known = if self.fast_path > 0 {
            match leading_scan(&self.a[i..], &self.b[j..], self.fast_path) {
                Some(len) => return (len, 0),
                None => self.fast_path,
            }
        } else {
            0
        };
        dual_search(max, known, |len| self.compare(i, j, len))
    }

    /// Tables of the primary lane for `a` and `b`.
    pub fn tables(&self) -> (&T, &T) {
        (&self.lanes[0].table_a, &self.lanes[0].table_b)
    }

    pub fn params(&self) -> &HashParams {
        &self.lanes[0].params
    }

    /// Auxiliary words across all lanes and both sequences.
    pub fn aux_words(&self) -> usize {
        self.lanes
            .iter()
            .map(|l| l.table_a.aux_words() + l.table_b.aux_words())
            .sum()
    }
}

impl<T: PrefixHashes> LcpOracle for HashLcp<'_, T> {
    #[inline]
    fn lcp(&self, i: usize, j: usize) -> usize {
        self.lcp_counted(i, j).0
    }
}

/// Single-lane LCP of `a[i..]` and `b[j..]` over explicit tables, without the leading-symbol shortcut.
pub fn lcp_hash<T: PrefixHashes>(
    a: &[u8],
    b: &[u8],
    table_a: &T,
    table_b: &T,
    params: &HashParams,
    i: usize,
    j: usize,
) -> usize {
    let max = (a.len() - i).min(b.len() - j);
    dual_search(max, 0, |len| {
        table_a.range_hash(a, params, i, len) == table_b.range_hash(b, params, j, len)
    })
    .0
}

/// Exponential search for the bracket `[2^l, 2^(l+1))` followed by binary search inside it.
///
/// `known` is a length already verified to match. Returns the largest matching
/// length in `[known, max]` and the number of probes issued.
fn dual_search(max: usize, known: usize, mut matches: impl FnMut(usize) -> bool) -> (usize, usize) {
    let mut probes = 0;
    let mut lo = known;
    let mut len = if known == 0 { 1 } else { known * 2 };
    while len <= max {
        probes += 1;
        if !matches(len) {
            break;
        }
        lo = len;
        len *= 2;
    }
    let mut hi = (len - 1).min(max);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        probes += 1;
        if matches(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    (lo, probes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::lcp_naive;

    fn no_fast_path() -> HashConfig {
        HashConfig {
            fast_path: 0,
            ..HashConfig::default()
        }
    }

    #[test]
    fn banana_bandana() {
        let (a, b) = (b"banana".as_slice(), b"bandana".as_slice());
        let full = HashLcp::with_prefix_tables(a, b, &no_fast_path());
        let blocked = HashLcp::with_blocked_tables(a, b, 2, &no_fast_path());
        assert_eq!(full.lcp(0, 0), 3);
        assert_eq!(blocked.lcp(0, 0), 3);
        let (ta, tb) = full.tables();
        assert_eq!(lcp_hash(a, b, ta, tb, full.params(), 0, 0), 3);
    }

    #[test]
    fn identical_and_mismatch() {
        let a = b"abracadabra";
        let h = HashLcp::with_prefix_tables(a, a, &no_fast_path());
        assert_eq!(h.lcp(0, 0), a.len());
        assert_eq!(h.lcp(0, 1), 0);
        assert_eq!(h.lcp(a.len(), 0), 0);
        assert_eq!(h.lcp(0, a.len()), 0);
    }

    #[test]
    fn probe_count_bound() {
        let a: Vec<u8> = std::iter::repeat_n(b'x', 5000).collect();
        let mut b = a.clone();
        b[3000] = b'y';
        for fast_path in [0, 8] {
            let h = HashLcp::with_prefix_tables(
                &a,
                &b,
                &HashConfig {
                    fast_path,
                    ..HashConfig::default()
                },
            );
            for (i, j) in [(0, 0), (10, 10), (2999, 2999), (3000, 3000), (0, 1), (100, 0)] {
                let (len, probes) = h.lcp_counted(i, j);
                assert_eq!(len, lcp_naive(&a, &b, i, j));
                let bound = 2 * (usize::BITS - (len + 1).leading_zeros()) as usize + 2;
                assert!(probes <= bound, "{probes} probes for L = {len}");
            }
        }
    }

    #[test]
    fn dual_lane_agrees() {
        let a = b"mississippi river";
        let b = b"missouri river";
        let h = HashLcp::with_blocked_tables(
            a,
            b,
            3,
            &HashConfig {
                dual: true,
                ..HashConfig::default()
            },
        );
        for i in 0..=a.len() {
            for j in 0..=b.len() {
                assert_eq!(h.lcp(i, j), lcp_naive(a, b, i, j));
            }
        }
        assert_eq!(h.aux_words(), 2 * (a.len() / 3 + 1 + b.len() / 3 + 1));
    }
}
