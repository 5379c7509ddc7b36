use rayon::prelude::*;

const PAR_GRAIN: usize = 1 << 14;

/// Doubling sparse table: `levels[l][i] = min(values[i .. i + 2^l])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn build(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().expect("level 0 exists");
            let len = prev.len() - width;
            let next: Vec<u32> = if len >= PAR_GRAIN {
                (0..len)
                    .into_par_iter()
                    .map(|i| prev[i].min(prev[i + width]))
                    .collect()
            } else {
                (0..len).map(|i| prev[i].min(prev[i + width])).collect()
            };
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    pub fn levels(&self) -> &[Vec<u32>] {
        &self.levels
    }

    /// Minimum of `values[lo..=hi]` from two overlapping power-of-two windows.
    ///
    /// Panics if `lo > hi` or `hi` is out of range.
    #[inline]
    pub fn min_inclusive(&self, lo: usize, hi: usize) -> u32 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }

    /// Rank-pair form used by suffix-array LCP: `min(values[i + 1 ..= j])` for `i < j`.
    #[inline]
    pub fn between_ranks(&self, i: usize, j: usize) -> u32 {
        self.min_inclusive(i + 1, j)
    }
}
