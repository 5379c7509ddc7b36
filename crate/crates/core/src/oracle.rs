//! Reference implementations: plain dynamic programming and brute-force
//! products. They stay on the simplest algorithmic path so they can judge the
//! fast solvers.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{sat_add, DistMatrix, INF};

/// Default refusal threshold for quadratic oracles, in DP cells.
pub const DEFAULT_CELL_CAP: u64 = 100_000_000;

/// Waves at least this wide are filled in parallel.
const WAVE_GRAIN: usize = 4096;

fn check_cap(n: usize, m: usize, cap: u64) -> Result<()> {
    let cells = n as u128 * m as u128;
    if cells > cap as u128 {
        return Err(Error::CellCapExceeded { cells, cap });
    }
    Ok(())
}

/// Full `(n + 1) x (m + 1)` DP table, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTable {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl DpTable {
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.cols + j]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `D[n][m]`.
    pub fn distance(&self) -> usize {
        self.cells[self.cells.len() - 1] as usize
    }
}

/// Textbook fill keeping the whole table.
pub fn dp_table(a: &[u8], b: &[u8], cap: u64) -> Result<DpTable> {
    check_cap(a.len(), b.len(), cap)?;
    let (rows, cols) = (a.len() + 1, b.len() + 1);
    let mut cells = vec![0u32; rows * cols];
    for (j, c) in cells[..cols].iter_mut().enumerate() {
        *c = j as u32;
    }
    for i in 1..rows {
        cells[i * cols] = i as u32;
        for j in 1..cols {
            let diag = cells[(i - 1) * cols + j - 1];
            cells[i * cols + j] = if a[i - 1] == b[j - 1] {
                diag
            } else {
                1 + diag
                    .min(cells[(i - 1) * cols + j])
                    .min(cells[i * cols + j - 1])
            };
        }
    }
    Ok(DpTable { rows, cols, cells })
}

/// Edit distance by the row-by-row recurrence, keeping two rows.
pub fn dp_edit_distance(a: &[u8], b: &[u8], cap: u64) -> Result<usize> {
    check_cap(a.len(), b.len(), cap)?;
    let mut prev: Vec<u32> = (0..=b.len() as u32).collect();
    let mut cur = vec![0u32; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i as u32 + 1;
        for (j, &cb) in b.iter().enumerate() {
            cur[j + 1] = if ca == cb {
                prev[j]
            } else {
                1 + prev[j].min(prev[j + 1]).min(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[b.len()] as usize)
}

/// Anti-diagonal wavefront: every cell with the same `i + j` is independent.
///
/// Keeps three rolling waves indexed by row.
pub fn antidiagonal_edit_distance(a: &[u8], b: &[u8], cap: u64) -> Result<usize> {
    check_cap(a.len(), b.len(), cap)?;
    let (n, m) = (a.len(), b.len());
    let mut before = vec![0u32; n + 1];
    let mut last = vec![0u32; n + 1];
    let mut wave = vec![0u32; n + 1];
    for d in 0..=n + m {
        let lo = d.saturating_sub(m);
        let hi = d.min(n);
        let fill = |i: usize, slot: &mut u32| {
            let j = d - i;
            *slot = if i == 0 {
                j as u32
            } else if j == 0 {
                i as u32
            } else if a[i - 1] == b[j - 1] {
                before[i - 1]
            } else {
                1 + before[i - 1].min(last[i - 1]).min(last[i])
            };
        };
        let span = &mut wave[lo..=hi];
        if span.len() >= WAVE_GRAIN {
            span.par_iter_mut()
                .enumerate()
                .for_each(|(k, slot)| fill(lo + k, slot));
        } else {
            for (k, slot) in span.iter_mut().enumerate() {
                fill(lo + k, slot);
            }
        }
        std::mem::swap(&mut before, &mut last);
        std::mem::swap(&mut last, &mut wave);
    }
    Ok(last[n] as usize)
}

/// Shortest `(0,0) -> (n,m)` distance using only cells with `|i - j| <= t`.
///
/// Returns [`INF`] when the band does not contain the target.
pub fn banded_dp(a: &[u8], b: &[u8], t: usize) -> u32 {
    let (n, m) = (a.len(), b.len());
    let inside = |i: usize, j: usize| i.abs_diff(j) <= t;
    let mut prev = vec![INF; m + 1];
    let mut cur = vec![INF; m + 1];
    for (j, slot) in prev.iter_mut().enumerate() {
        if inside(0, j) {
            *slot = j as u32;
        }
    }
    for i in 1..=n {
        for j in 0..=m {
            cur[j] = if !inside(i, j) {
                INF
            } else if j == 0 {
                sat_add(prev[0], 1)
            } else {
                let diag = sat_add(prev[j - 1], u32::from(a[i - 1] != b[j - 1]));
                diag.min(sat_add(prev[j], 1)).min(sat_add(cur[j - 1], 1))
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// LCP of `a[i..]` and `b[j..]` by scanning. Offsets equal to a length give 0.
pub fn lcp_naive(a: &[u8], b: &[u8], i: usize, j: usize) -> usize {
    a[i..].iter().zip(&b[j..]).take_while(|(x, y)| x == y).count()
}

/// Min-plus product `d1 ⊗ d2` over the shared dimension, by triple loop.
pub fn minplus_boundary(d1: &DistMatrix, d2: &DistMatrix) -> Result<DistMatrix> {
    if d1.cols() != d2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            d1.rows(),
            d1.cols(),
            d2.rows(),
            d2.cols()
        )));
    }
    let mut out = DistMatrix::filled(d1.rows(), d2.cols(), INF);
    for i in 0..d1.rows() {
        for j in 0..d2.cols() {
            let best = (0..d1.cols())
                .map(|l| sat_add(d1.get(i, l), d2.get(l, j)))
                .min()
                .unwrap_or(INF);
            out.set(i, j, best);
        }
    }
    Ok(out)
}
