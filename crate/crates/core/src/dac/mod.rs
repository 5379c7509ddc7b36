//! Divide-and-conquer edit distance over boundary shortest-path matrices.
//!
//! A [`Region`] is a rectangle of the alignment grid clipped to a diagonal
//! [`Band`]. Its [`SpMatrix`] holds the shortest distances from every vertex on
//! its left and top edges to every vertex on its bottom and right edges.
//! Adjacent regions merge with [`combine`]. [`check`] solves the whole grid
//! inside the stripe `|x - y| <= t`, and [`edit_distance_dacmm`] doubles `t`
//! until the stripe answer is at most `t`, which makes it exact.

mod combine;
mod region;
mod spmatrix;

pub use combine::{combine, combine_keeping, combine_with, CombineScratch, Seam, PAR_PAIRS};
pub use region::{Band, EdgeRule, Region, Vertex};
pub use spmatrix::SpMatrix;

/// Regions at least this many cells in area solve their quadrants in parallel.
const PAR_AREA: usize = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DacConfig {
    /// Regions with `min(rows, cols)` at or below this are solved by direct DP.
    pub base_cutoff: usize,
}

impl Default for DacConfig {
    fn default() -> Self {
        Self { base_cutoff: 4 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DacStats {
    /// Stripe widths tried, in order.
    pub widths: Vec<usize>,
    /// Stripe distance returned by each check.
    pub sigmas: Vec<u32>,
}

impl DacStats {
    pub fn checks(&self) -> usize {
        self.widths.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DacOutcome {
    pub distance: usize,
    pub stats: DacStats,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    /// Shortest `(0, 0) -> (n, m)` distance inside the stripe.
    pub sigma: u32,
    pub matrix: SpMatrix,
}

/// Boundary distances of `region` by recursive 2x2 splitting.
pub fn aalm_sp(rule: &EdgeRule<'_>, region: Region, config: &DacConfig) -> SpMatrix {
    if region.is_empty() {
        return SpMatrix::unsolved(region);
    }
    if region.rows().min(region.cols()) <= config.base_cutoff.max(1) {
        return SpMatrix::by_dynamic_programming(rule, region);
    }
    let [g1, g2, g3, g4] = region.quadrants();
    let solve = |r| aalm_sp(rule, r, config);
    let ((s1, s2), (s3, s4)) = fork(region, || (solve(g1), solve(g2)), || (solve(g3), solve(g4)));
    merge_quadrants(region, s1, s2, s3, s4)
}

/// Boundary distances of `region`, recursing on the two quadrants the band runs through
/// and handing the off-diagonal quadrants to [`aalm_sp`].
pub fn dacmm_rec(rule: &EdgeRule<'_>, region: Region, config: &DacConfig) -> SpMatrix {
    if region.is_empty() {
        return SpMatrix::unsolved(region);
    }
    let reach = region.band.hi.max(-region.band.lo).max(1) as usize;
    if region.rows().min(region.cols()) < 2 * reach {
        return aalm_sp(rule, region, config);
    }
    let [g1, g2, g3, g4] = region.quadrants();
    let ((s1, s2), (s3, s4)) = fork(
        region,
        || (dacmm_rec(rule, g1, config), aalm_sp(rule, g2, config)),
        || (aalm_sp(rule, g3, config), dacmm_rec(rule, g4, config)),
    );
    merge_quadrants(region, s1, s2, s3, s4)
}

fn fork<A: Send, B: Send>(region: Region, a: impl FnOnce() -> A + Send, b: impl FnOnce() -> B + Send) -> (A, B) {
    if region.rows() * region.cols() >= PAR_AREA {
        rayon::join(a, b)
    } else {
        (a(), b())
    }
}

/// Joins four quadrant matrices. An empty off-diagonal quadrant is skipped by first
/// joining the two quadrants beside it and then attaching the top-left one.
fn merge_quadrants(region: Region, s1: SpMatrix, s2: SpMatrix, s3: SpMatrix, s4: SpMatrix) -> SpMatrix {
    let expect = "quadrants of one region are adjacent";
    if s3.region.is_empty() {
        let right = combine(&s2, &s4).expect(expect);
        let left = Region::new(region.x0, region.x1, region.y0, s1.region.y1, region.band);
        if let Some(s1) = s1.clone().reframe(left) {
            return combine(&s1, &right).expect(expect);
        }
    }
    if s2.region.is_empty() {
        let bottom = combine(&s3, &s4).expect(expect);
        let top = Region::new(region.x0, s1.region.x1, region.y0, region.y1, region.band);
        if let Some(s1) = s1.clone().reframe(top) {
            return combine(&s1, &bottom).expect(expect);
        }
    }
    let top = combine(&s1, &s2).expect(expect);
    let bottom = combine(&s3, &s4).expect(expect);
    combine(&top, &bottom).expect(expect)
}

/// Solves the `(n+1) x (m+1)` grid of `a` and `b` inside the stripe `|x - y| <= t`.
///
/// Requires `t >= |n - m|` so that `(n, m)` lies in the stripe.
pub fn check(a: &[u8], b: &[u8], t: usize, config: &DacConfig) -> CheckResult {
    let (n, m) = (a.len(), b.len());
    assert!(t >= n.abs_diff(m), "stripe {t} misses the corner ({n}, {m})");
    let rule = EdgeRule::new(a, b);
    let region = Region::new(0, n, 0, m, Band::stripe(t));
    let matrix = dacmm_rec(&rule, region, config);
    let sigma = matrix
        .distance((0, 0), (n, m))
        .expect("both corners lie on the boundary");
    CheckResult { sigma, matrix }
}

/// Edit distance by stripe doubling, starting at `t = max(1, |n - m|)`.
pub fn edit_distance_dacmm(a: &[u8], b: &[u8]) -> DacOutcome {
    edit_distance_dacmm_with(a, b, &DacConfig::default())
}

pub fn edit_distance_dacmm_with(a: &[u8], b: &[u8], config: &DacConfig) -> DacOutcome {
    let (n, m) = (a.len(), b.len());
    let mut stats = DacStats::default();
    if n == 0 || m == 0 {
        return DacOutcome {
            distance: n.max(m),
            stats,
        };
    }
    let ceiling = n.max(m);
    let mut t = n.abs_diff(m).max(1);
    loop {
        let sigma = check(a, b, t, config).sigma;
        stats.widths.push(t);
        stats.sigmas.push(sigma);
        if sigma as usize <= t || t >= ceiling {
            return DacOutcome {
                distance: sigma as usize,
                stats,
            };
        }
        t = (2 * t).min(ceiling);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{banded_dp, dp_edit_distance, DEFAULT_CELL_CAP};

    #[test]
    fn kitten_sitting_doubling() {
        let out = edit_distance_dacmm(b"kitten", b"sitting");
        assert_eq!(out.distance, 3);
        assert_eq!(out.stats.widths, [1, 2, 4]);
        assert_eq!(*out.stats.sigmas.last().unwrap(), 3);
    }

    #[test]
    fn identical_stops_at_once() {
        let out = edit_distance_dacmm(b"abcdefgh", b"abcdefgh");
        assert_eq!(out.distance, 0);
        assert_eq!(out.stats.widths, [1]);
        assert_eq!(check(b"abcdefgh", b"abcdefgh", 1, &DacConfig::default()).sigma, 0);
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(edit_distance_dacmm(b"", b"abc").distance, 3);
        assert_eq!(edit_distance_dacmm(b"", b"").distance, 0);
    }

    #[test]
    fn two_by_two_is_the_base_case() {
        let rule = EdgeRule::new(b"ab", b"ba");
        let region = Region::new(0, 2, 0, 2, Band::stripe(2));
        let cfg = DacConfig::default();
        assert_eq!(dacmm_rec(&rule, region, &cfg), aalm_sp(&rule, region, &cfg));
    }

    #[test]
    fn aalm_matches_direct_dp() {
        let a = b"the cat sat on the mat";
        let b = b"a cat sat on a hat!!";
        let rule = EdgeRule::new(a, b);
        let cfg = DacConfig { base_cutoff: 2 };
        for band in [Band::unbounded(a.len(), b.len()), Band::stripe(3), Band::new(-1, 5)] {
            let region = Region::new(0, a.len(), 0, b.len(), band);
            assert_eq!(
                aalm_sp(&rule, region, &cfg),
                SpMatrix::by_dynamic_programming(&rule, region),
                "{band:?}"
            );
        }
    }

    #[test]
    fn stripe_sixteen() {
        let a = b"qwertyuiopasdfgh";
        let b = b"qwrtyuiopassdfgx";
        let cfg = DacConfig::default();
        for t in 0..=16 {
            let band = banded_dp(a, b, t);
            if t >= 1 {
                assert_eq!(check(a, b, t, &cfg).sigma, band, "t = {t}");
            }
        }
        assert_eq!(
            edit_distance_dacmm(a, b).distance,
            dp_edit_distance(a, b, DEFAULT_CELL_CAP).unwrap()
        );
    }

    #[test]
    fn skewed_lengths() {
        let a = b"abababababababababababab";
        let b = b"bbabab";
        let out = edit_distance_dacmm(a, b);
        assert_eq!(out.distance, dp_edit_distance(a, b, DEFAULT_CELL_CAP).unwrap());
        assert_eq!(out.stats.widths[0], a.len() - b.len());
        let out = edit_distance_dacmm(b, a);
        assert_eq!(out.distance, dp_edit_distance(a, b, DEFAULT_CELL_CAP).unwrap());
    }
}
