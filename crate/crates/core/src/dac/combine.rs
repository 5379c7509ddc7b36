//! Min-plus combining of two adjacent regions across their shared boundary.
//!
//! Crossing pairs (an input of the first region, an output of the second)
//! take `min_l D1[v][w_l] + D2[w_l][u]` over the seam vertices `w_l`. The
//! leftmost minimiser `theta(v, u)` is monotone in both `v` and `u`, so it is
//! filled in strided rounds: at stride `s` the pairs whose indices are odd
//! multiples of `s` search only between the minimisers of their neighbours
//! at distance `s`, which were settled earlier.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use super::region::{Region, Vertex};
use super::spmatrix::SpMatrix;
use crate::error::{Error, Result};
use crate::matrix::{sat_add, INF};

/// Pair counts at or above this are searched in parallel.
pub const PAR_PAIRS: usize = 1 << 12;

/// The boundary two regions share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seam {
    /// First region on top; the seam is row `row`.
    Vertical { row: usize },
    /// First region on the left; the seam is column `col`.
    Horizontal { col: usize },
}

impl Seam {
    /// Seam between `first` and `second`, and the rectangle they form together.
    pub fn between(first: &Region, second: &Region) -> Result<(Seam, Region)> {
        if first.band != second.band {
            return Err(Error::DimensionMismatch("regions use different bands".into()));
        }
        if first.x1 == second.x0 && first.y0 == second.y0 && first.y1 == second.y1 {
            let union = Region::new(first.x0, second.x1, first.y0, first.y1, first.band);
            return Ok((Seam::Vertical { row: first.x1 }, union));
        }
        if first.y1 == second.y0 && first.x0 == second.x0 && first.x1 == second.x1 {
            let union = Region::new(first.x0, first.x1, first.y0, second.y1, first.band);
            return Ok((Seam::Horizontal { col: first.y1 }, union));
        }
        Err(Error::DimensionMismatch(format!("regions {first:?} and {second:?} are not adjacent")))
    }

    #[inline]
    fn on(&self, (x, y): Vertex) -> bool {
        match *self {
            Seam::Vertical { row } => x == row,
            Seam::Horizontal { col } => y == col,
        }
    }
}

/// Where a row or column of the combined matrix comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    First(u32),
    Second(u32),
}

/// Working storage for [`combine_with`]; reusable across calls.
#[derive(Debug, Default)]
pub struct CombineScratch {
    in_src: Vec<Source>,
    out_src: Vec<Source>,
    w1: Vec<u32>,
    w2: Vec<u32>,
    row_first: Vec<i64>,
    row_last: Vec<i64>,
    col_first: Vec<i64>,
    col_last: Vec<i64>,
    theta: Vec<AtomicU32>,
    rows: usize,
    cols: usize,
}

impl CombineScratch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Room for a combine with `inputs x outputs` crossing pairs and `seam` shared vertices.
    pub fn with_capacity(inputs: usize, outputs: usize, seam: usize) -> Self {
        Self {
            in_src: Vec::with_capacity(inputs * 2),
            out_src: Vec::with_capacity(outputs * 2),
            w1: Vec::with_capacity(seam),
            w2: Vec::with_capacity(seam),
            row_first: Vec::with_capacity(inputs),
            row_last: Vec::with_capacity(inputs),
            col_first: Vec::with_capacity(outputs),
            col_last: Vec::with_capacity(outputs),
            theta: Vec::with_capacity(inputs * outputs),
            rows: 0,
            cols: 0,
        }
    }

    /// Leftmost seam index minimising the crossing pair `(input i of D1, output j of D2)`
    /// from the last combine. Pairs with no finite path get the lower end of their range.
    pub fn theta(&self, i: usize, j: usize) -> u32 {
        self.theta[i * self.cols + j].load(Ordering::Relaxed)
    }

    /// Crossing-block shape of the last combine.
    pub fn theta_shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
}

/// Combined matrix of two adjacent regions, the first above or left of the second.
pub fn combine(d1: &SpMatrix, d2: &SpMatrix) -> Result<SpMatrix> {
    let mut scratch = CombineScratch::new();
    combine_keeping(d1, d2, &mut scratch)
}

/// As [`combine`], leaving the minimiser table in `scratch`.
pub fn combine_keeping(d1: &SpMatrix, d2: &SpMatrix, scratch: &mut CombineScratch) -> Result<SpMatrix> {
    let (_, union) = Seam::between(&d1.region, &d2.region)?;
    let mut out = SpMatrix::with_capacity(union, d1.inputs.len() + d2.inputs.len(), d1.outputs.len() + d2.outputs.len());
    combine_with(d1, d2, scratch, &mut out)?;
    Ok(out)
}

/// Writes the combination of `d1` and `d2` into `out`, reusing the buffers of `out` and `scratch`.
///
/// Allocates nothing when both already have enough capacity.
pub fn combine_with(d1: &SpMatrix, d2: &SpMatrix, scratch: &mut CombineScratch, out: &mut SpMatrix) -> Result<()> {
    let (seam, union) = Seam::between(&d1.region, &d2.region)?;

    scratch.w1.clear();
    scratch.w2.clear();
    scratch
        .w1
        .extend((0..d1.outputs.len() as u32).filter(|&k| seam.on(d1.outputs[k as usize])));
    scratch
        .w2
        .extend((0..d2.inputs.len() as u32).filter(|&k| seam.on(d2.inputs[k as usize])));
    let same = scratch.w1.len() == scratch.w2.len()
        && scratch
            .w1
            .iter()
            .zip(&scratch.w2)
            .all(|(&p, &q)| d1.outputs[p as usize] == d2.inputs[q as usize]);
    if !same {
        return Err(Error::SeamMismatch(format!(
            "{} seam vertices leave the first region, {} enter the second",
            scratch.w1.len(),
            scratch.w2.len()
        )));
    }

    out.region = union;
    out.inputs.clear();
    out.outputs.clear();
    scratch.in_src.clear();
    scratch.out_src.clear();
    let first_in = d1.inputs.iter().enumerate().map(|(k, &v)| (v, Source::First(k as u32)));
    let second_in = d2.inputs.iter().enumerate().map(|(k, &v)| (v, Source::Second(k as u32)));
    let first_out = d1.outputs.iter().enumerate().map(|(k, &v)| (v, Source::First(k as u32)));
    let second_out = d2.outputs.iter().enumerate().map(|(k, &v)| (v, Source::Second(k as u32)));
    match seam {
        Seam::Vertical { row } => {
            push_all(&mut out.inputs, &mut scratch.in_src, second_in.filter(|&((x, _), _)| x > row));
            push_all(&mut out.inputs, &mut scratch.in_src, first_in);
            push_all(&mut out.outputs, &mut scratch.out_src, second_out);
            push_all(&mut out.outputs, &mut scratch.out_src, first_out.filter(|&((x, _), _)| x < row));
        }
        Seam::Horizontal { col } => {
            push_all(&mut out.inputs, &mut scratch.in_src, first_in);
            push_all(&mut out.inputs, &mut scratch.in_src, second_in.filter(|&((_, y), _)| y > col));
            push_all(&mut out.outputs, &mut scratch.out_src, first_out.filter(|&((_, y), _)| y < col));
            push_all(&mut out.outputs, &mut scratch.out_src, second_out);
        }
    }

    let p = d1.inputs.len();
    let q = d2.outputs.len();
    let wn = scratch.w1.len();
    let x = |i: usize, l: usize| d1.dist.get(i, scratch.w1[l] as usize);
    let y = |l: usize, j: usize| d2.dist.get(scratch.w2[l] as usize, j);

    finite_span(p, wn, x, &mut scratch.row_first, &mut scratch.row_last);
    finite_span(q, wn, |j, l| y(l, j), &mut scratch.col_first, &mut scratch.col_last);
    scratch.theta.clear();
    scratch.theta.resize_with(p * q, || AtomicU32::new(0));
    scratch.rows = p;
    scratch.cols = q;

    let search = Search {
        x: &x,
        y: &y,
        row_first: &scratch.row_first,
        row_last: &scratch.row_last,
        col_first: &scratch.col_first,
        col_last: &scratch.col_last,
        theta: &scratch.theta,
        p,
        q,
    };
    search.run();

    let (rows, cols) = (out.inputs.len(), out.outputs.len());
    out.dist.reset(rows, cols, INF);
    let fill_row = |r: usize, line: &mut [u32]| match scratch.in_src[r] {
        Source::First(i) => {
            let i = i as usize;
            for (c, slot) in line.iter_mut().enumerate() {
                *slot = match scratch.out_src[c] {
                    Source::First(o) => d1.dist.get(i, o as usize),
                    Source::Second(j) => search.crossing(i, j as usize),
                };
            }
        }
        Source::Second(k) => {
            for (c, slot) in line.iter_mut().enumerate() {
                if let Source::Second(j) = scratch.out_src[c] {
                    *slot = d2.dist.get(k as usize, j as usize);
                }
            }
        }
    };
    if cols > 0 {
        let data = out.dist.as_mut_slice();
        if rows * cols >= PAR_PAIRS {
            data.par_chunks_mut(cols).enumerate().for_each(|(r, line)| fill_row(r, line));
        } else {
            data.chunks_mut(cols).enumerate().for_each(|(r, line)| fill_row(r, line));
        }
    }
    Ok(())
}

fn push_all(vertices: &mut Vec<Vertex>, sources: &mut Vec<Source>, items: impl Iterator<Item = (Vertex, Source)>) {
    for (v, s) in items {
        vertices.push(v);
        sources.push(s);
    }
}

/// First and last finite seam index of every line. Empty lines get `(0, -1)`
/// before the first non-empty line and `(w, w - 1)` after it.
fn finite_span(lines: usize, w: usize, value: impl Fn(usize, usize) -> u32, first: &mut Vec<i64>, last: &mut Vec<i64>) {
    first.clear();
    last.clear();
    let mut seen = false;
    for line in 0..lines {
        let lo = (0..w).find(|&l| value(line, l) < INF);
        match lo {
            Some(lo) => {
                let hi = (lo..w).rev().find(|&l| value(line, l) < INF).unwrap_or(lo);
                first.push(lo as i64);
                last.push(hi as i64);
                seen = true;
            }
            None if seen => {
                first.push(w as i64);
                last.push(w as i64 - 1);
            }
            None => {
                first.push(0);
                last.push(-1);
            }
        }
    }
}

struct Search<'a, X, Y> {
    x: &'a X,
    y: &'a Y,
    row_first: &'a [i64],
    row_last: &'a [i64],
    col_first: &'a [i64],
    col_last: &'a [i64],
    theta: &'a [AtomicU32],
    p: usize,
    q: usize,
}

impl<X, Y> Search<'_, X, Y>
where
    X: Fn(usize, usize) -> u32 + Sync,
    Y: Fn(usize, usize) -> u32 + Sync,
{
    #[inline]
    fn range(&self, i: usize, j: usize) -> (i64, i64) {
        (
            self.row_first[i].max(self.col_first[j]),
            self.row_last[i].min(self.col_last[j]),
        )
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> i64 {
        self.theta[i * self.q + j].load(Ordering::Relaxed) as i64
    }

    fn run(&self) {
        if self.p == 0 || self.q == 0 {
            return;
        }
        let mut s = self.p.max(self.q).next_power_of_two();
        self.settle(0, 0, i64::MIN, i64::MAX);
        while s > 1 {
            s /= 2;
            // Even rows, odd columns.
            self.phase(0, s, s, |i, j| {
                (self.get(i, j - s), self.upper(i, j + s))
            });
            // Odd rows, even columns.
            self.phase(s, 0, s, |i, j| {
                (self.get(i - s, j), self.upper(i + s, j))
            });
            // Odd rows, odd columns.
            self.phase(s, s, s, |i, j| {
                (
                    self.get(i - s, j).max(self.get(i, j - s)),
                    self.upper(i + s, j).min(self.upper(i, j + s)),
                )
            });
        }
    }

    #[inline]
    fn upper(&self, i: usize, j: usize) -> i64 {
        if i < self.p && j < self.q {
            self.get(i, j)
        } else {
            i64::MAX
        }
    }

    /// All pairs `(row0 + 2sk, col0 + 2sl)` in parallel, each bounded by `bounds`.
    fn phase(&self, row0: usize, col0: usize, s: usize, bounds: impl Fn(usize, usize) -> (i64, i64) + Sync) {
        if row0 >= self.p || col0 >= self.q {
            return;
        }
        let step = 2 * s;
        let rows = (self.p - row0).div_ceil(step);
        let cols = (self.q - col0).div_ceil(step);
        let row_task = |k: usize| {
            let i = row0 + k * step;
            for j in (col0..self.q).step_by(step) {
                let (lo, hi) = bounds(i, j);
                self.settle(i, j, lo, hi);
            }
        };
        if rows * cols >= PAR_PAIRS {
            (0..rows).into_par_iter().for_each(row_task);
        } else {
            (0..rows).for_each(row_task);
        }
    }

    /// Leftmost minimiser of pair `(i, j)` within `[lo, hi]` intersected with its finite range.
    fn settle(&self, i: usize, j: usize, lo: i64, hi: i64) {
        let (first, last) = self.range(i, j);
        let theta = if first > last {
            first
        } else {
            let (a, b) = (lo.max(first), hi.min(last));
            if a <= b {
                self.argmin(i, j, a as usize, b as usize)
            } else {
                self.argmin(i, j, first as usize, last as usize)
            }
        };
        self.theta[i * self.q + j].store(theta as u32, Ordering::Relaxed);
    }

    fn argmin(&self, i: usize, j: usize, a: usize, b: usize) -> i64 {
        let mut best = u32::MAX;
        let mut arg = a;
        for l in a..=b {
            let v = sat_add((self.x)(i, l), (self.y)(l, j));
            if v < best {
                best = v;
                arg = l;
            }
        }
        arg as i64
    }

    /// Distance of crossing pair `(i, j)` through its settled minimiser.
    fn crossing(&self, i: usize, j: usize) -> u32 {
        let (first, last) = self.range(i, j);
        if first > last {
            return INF;
        }
        let l = self.get(i, j) as usize;
        sat_add((self.x)(i, l), (self.y)(l, j))
    }
}
