/// A grid vertex `(x, y)`: `x` characters of `A` and `y` characters of `B` consumed.
pub type Vertex = (usize, usize);

/// Diagonal stripe `lo <= x - y <= hi` in global coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Band {
    pub lo: isize,
    pub hi: isize,
}

impl Band {
    pub fn new(lo: isize, hi: isize) -> Self {
        Self { lo, hi }
    }

    /// `|x - y| <= t`.
    pub fn stripe(t: usize) -> Self {
        Self::new(-(t as isize), t as isize)
    }

    /// Wide enough to admit every vertex of an `(n+1) x (m+1)` grid.
    pub fn unbounded(n: usize, m: usize) -> Self {
        Self::new(-(m as isize), n as isize)
    }

    #[inline]
    pub fn admits(&self, (x, y): Vertex) -> bool {
        let d = x as isize - y as isize;
        self.lo <= d && d <= self.hi
    }
}

/// Vertex rectangle `[x0, x1] x [y0, y1]`, keeping only vertices inside `band`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub x0: usize,
    pub x1: usize,
    pub y0: usize,
    pub y1: usize,
    pub band: Band,
}

impl Region {
    /// Panics unless `x0 <= x1` and `y0 <= y1`.
    pub fn new(x0: usize, x1: usize, y0: usize, y1: usize, band: Band) -> Self {
        assert!(x0 <= x1 && y0 <= y1, "inverted region");
        Self { x0, x1, y0, y1, band }
    }

    /// The whole `(n+1) x (m+1)` grid, unclipped.
    pub fn full(n: usize, m: usize) -> Self {
        Self::new(0, n, 0, m, Band::unbounded(n, m))
    }

    /// Edge rows.
    pub fn rows(&self) -> usize {
        self.x1 - self.x0
    }

    /// Edge columns.
    pub fn cols(&self) -> usize {
        self.y1 - self.y0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (self.x0..=self.x1).contains(&v.0) && (self.y0..=self.y1).contains(&v.1) && self.band.admits(v)
    }

    /// Whether no vertex of the rectangle lies inside the band.
    pub fn is_empty(&self) -> bool {
        let max = self.x1 as isize - self.y0 as isize;
        let min = self.x0 as isize - self.y1 as isize;
        max < self.band.lo || min > self.band.hi
    }

    /// Left edge bottom-to-top, then top edge left-to-right.
    pub fn push_inputs(&self, out: &mut Vec<Vertex>) {
        let band = self.band;
        out.extend((self.x0..=self.x1).rev().map(|x| (x, self.y0)).filter(|&v| band.admits(v)));
        out.extend((self.y0 + 1..=self.y1).map(|y| (self.x0, y)).filter(|&v| band.admits(v)));
    }

    /// Bottom edge left-to-right, then right edge bottom-to-top.
    pub fn push_outputs(&self, out: &mut Vec<Vertex>) {
        let band = self.band;
        out.extend((self.y0..=self.y1).map(|y| (self.x1, y)).filter(|&v| band.admits(v)));
        out.extend((self.x0..self.x1).rev().map(|x| (x, self.y1)).filter(|&v| band.admits(v)));
    }

    pub fn inputs(&self) -> Vec<Vertex> {
        let mut v = Vec::new();
        self.push_inputs(&mut v);
        v
    }

    pub fn outputs(&self) -> Vec<Vertex> {
        let mut v = Vec::new();
        self.push_outputs(&mut v);
        v
    }

    /// Quadrants split at the rounded-up midpoints: top-left, top-right, bottom-left, bottom-right.
    pub fn quadrants(&self) -> [Region; 4] {
        let xm = self.x0 + self.rows().div_ceil(2);
        let ym = self.y0 + self.cols().div_ceil(2);
        let b = self.band;
        [
            Region::new(self.x0, xm, self.y0, ym, b),
            Region::new(self.x0, xm, ym, self.y1, b),
            Region::new(xm, self.x1, self.y0, ym, b),
            Region::new(xm, self.x1, ym, self.y1, b),
        ]
    }
}

/// Edge weights of the alignment grid: unit for gaps, 0 or 1 for diagonals.
#[derive(Clone, Copy, Debug)]
pub struct EdgeRule<'s> {
    pub a: &'s [u8],
    pub b: &'s [u8],
}

impl<'s> EdgeRule<'s> {
    pub fn new(a: &'s [u8], b: &'s [u8]) -> Self {
        Self { a, b }
    }

    /// Weight of the diagonal edge entering `(x, y)`; requires `x, y >= 1`.
    #[inline]
    pub fn diagonal(&self, x: usize, y: usize) -> u32 {
        (self.a[x - 1] != self.b[y - 1]) as u32
    }
}
