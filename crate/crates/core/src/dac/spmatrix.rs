use super::region::{EdgeRule, Region, Vertex};
use crate::matrix::{DistMatrix, INF};

/// Boundary-to-boundary shortest distances of a banded region.
///
/// Row `r` of `dist` belongs to `inputs[r]`, column `c` to `outputs[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpMatrix {
    pub(crate) region: Region,
    pub(crate) inputs: Vec<Vertex>,
    pub(crate) outputs: Vec<Vertex>,
    pub(crate) dist: DistMatrix,
}

impl SpMatrix {
    /// A matrix over `region` with no paths computed: every reachable pair is INF.
    pub fn unsolved(region: Region) -> Self {
        let inputs = region.inputs();
        let outputs = region.outputs();
        let dist = DistMatrix::filled(inputs.len(), outputs.len(), INF);
        Self {
            region,
            inputs,
            outputs,
            dist,
        }
    }

    /// Placeholder with room for `inputs x outputs` entries, for reuse as a combine target.
    pub fn with_capacity(region: Region, inputs: usize, outputs: usize) -> Self {
        Self {
            region,
            inputs: Vec::with_capacity(inputs),
            outputs: Vec::with_capacity(outputs),
            dist: DistMatrix::with_capacity(inputs * outputs),
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn inputs(&self) -> &[Vertex] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[Vertex] {
        &self.outputs
    }

    pub fn dist(&self) -> &DistMatrix {
        &self.dist
    }

    pub fn input_index(&self, v: Vertex) -> Option<usize> {
        self.inputs.iter().position(|&w| w == v)
    }

    pub fn output_index(&self, v: Vertex) -> Option<usize> {
        self.outputs.iter().position(|&w| w == v)
    }

    /// Distance from input vertex `from` to output vertex `to`, if both are on the boundary.
    pub fn distance(&self, from: Vertex, to: Vertex) -> Option<u32> {
        Some(self.dist.get(self.input_index(from)?, self.output_index(to)?))
    }

    /// Reinterprets the matrix over a larger rectangle whose extra area holds no band vertex.
    ///
    /// Returns `None` if the boundary would change.
    pub fn reframe(mut self, region: Region) -> Option<Self> {
        if region.inputs() != self.inputs || region.outputs() != self.outputs {
            return None;
        }
        self.region = region;
        Some(self)
    }

    /// One single-source DP per input, confined to the region and its band.
    pub fn by_dynamic_programming(rule: &EdgeRule<'_>, region: Region) -> Self {
        let mut sp = Self::unsolved(region);
        let width = region.cols() + 1;
        let mut grid = vec![INF; (region.rows() + 1) * width];
        for (r, &(vx, vy)) in sp.inputs.iter().enumerate() {
            sweep(rule, &region, (vx, vy), &mut grid, width);
            for (c, &(ux, uy)) in sp.outputs.iter().enumerate() {
                if ux >= vx && uy >= vy {
                    sp.dist.set(r, c, grid[(ux - region.x0) * width + (uy - region.y0)]);
                }
            }
        }
        sp
    }
}

/// Distances from `source` to every vertex of `region` dominating it; other cells are left stale.
fn sweep(rule: &EdgeRule<'_>, region: &Region, (sx, sy): Vertex, grid: &mut [u32], width: usize) {
    let band = region.band;
    for x in sx..=region.x1 {
        let row = (x - region.x0) * width;
        for y in sy..=region.y1 {
            let cell = row + (y - region.y0);
            if !band.admits((x, y)) {
                grid[cell] = INF;
                continue;
            }
            if x == sx && y == sy {
                grid[cell] = 0;
                continue;
            }
            let mut best = INF;
            if x > sx {
                best = best.min(grid[cell - width] + 1);
            }
            if y > sy {
                best = best.min(grid[cell - 1] + 1);
            }
            if x > sx && y > sy {
                best = best.min(grid[cell - width - 1] + rule.diagonal(x, y));
            }
            grid[cell] = best.min(INF);
        }
    }
}
