/// Longest-common-prefix queries between suffixes of two fixed sequences `a` and `b`.
///
/// Positions are 0-based offsets: `lcp(i, j)` is the length of the longest
/// common prefix of `a[i..]` and `b[j..]`. An offset equal to the sequence
/// length denotes the empty suffix and yields 0.
pub trait LcpOracle: Sync {
    fn lcp(&self, i: usize, j: usize) -> usize;
}

impl<T: LcpOracle + ?Sized> LcpOracle for &T {
    fn lcp(&self, i: usize, j: usize) -> usize {
        (**self).lcp(i, j)
    }
}

/// Direct character comparison, no preprocessing.
#[derive(Clone, Copy, Debug)]
pub struct NaiveLcp<'a> {
    a: &'a [u8],
    b: &'a [u8],
}

impl<'a> NaiveLcp<'a> {
    pub fn new(a: &'a [u8], b: &'a [u8]) -> Self {
        Self { a, b }
    }
}

impl LcpOracle for NaiveLcp<'_> {
    fn lcp(&self, i: usize, j: usize) -> usize {
        crate::oracle::lcp_naive(self.a, self.b, i, j)
    }
}

/// Compares up to `limit` leading symbols directly.
///
/// Returns `Some(len)` when the answer is already known (a mismatch or the
/// end of either suffix was hit within the window), `None` when all `limit`
/// symbols matched and a full query is needed.
#[inline]
pub(crate) fn leading_scan(a: &[u8], b: &[u8], limit: usize) -> Option<usize> {
    let max = a.len().min(b.len());
    let window = limit.min(max);
    for k in 0..window {
        if a[k] != b[k] {
            return Some(k);
        }
    }
    if window == max {
        Some(max)
    } else {
        None
    }
}
