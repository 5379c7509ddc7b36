/// Saturating "unreachable" distance. Two of them still add without wrapping.
pub const INF: u32 = u32::MAX / 4;

/// `a + b`, clamped to [`INF`].
#[inline]
pub fn sat_add(a: u32, b: u32) -> u32 {
    (a + b).min(INF)
}

/// Dense row-major matrix of edit counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DistMatrix {
    pub fn filled(rows: usize, cols: usize, value: u32) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [u32] {
        &mut self.data
    }

    /// Empty matrix whose buffer already holds `capacity` entries.
    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            rows: 0,
            cols: 0,
            data: Vec::with_capacity(capacity),
        }
    }

    /// Reshapes in place to `rows x cols`, every entry `value`, reusing the buffer.
    pub fn reset(&mut self, rows: usize, cols: usize, value: u32) {
        self.rows = rows;
        self.cols = cols;
        self.data.clear();
        self.data.resize(rows * cols, value);
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}
