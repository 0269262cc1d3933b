use crate::arith::binom;
use crate::triangulation::{OneTieParams, Partition, TieCounts, Triangulation};

/// Division data at an interior vertex meeting `s_gamma` slopes:
/// `s_gamma (r+1) = alpha (s_gamma - 1) + nu` and `mu = s_gamma - 1 - nu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexStarData {
    pub s_gamma: u32,
    pub alpha: u32,
    pub nu: u32,
    pub mu: u32,
}

impl VertexStarData {
    /// `None` when `s_gamma < 2`: a vertex in the middle of a straight line
    /// carries no division data.
    pub fn new(s_gamma: u32, r: u32) -> Option<Self> {
        if s_gamma < 2 {
            return None;
        }
        let n = s_gamma * (r + 1);
        let alpha = n / (s_gamma - 1);
        let nu = n % (s_gamma - 1);
        Some(Self { s_gamma, alpha, nu, mu: s_gamma - 1 - nu })
    }

    /// `mu binom(d+2-alpha, 2) + nu binom(d+1-alpha, 2)`.
    pub fn contribution(&self, d: u32) -> i64 {
        let (d, a) = (d as i64, self.alpha as i64);
        (self.mu as u64 * binom(d + 2 - a, 2) + self.nu as u64 * binom(d + 1 - a, 2)) as i64
    }
}

/// Lower bound from the number of interior edges and the slope counts at
/// the interior vertices.
fn lower_bound_from(edges: usize, slope_counts: impl Iterator<Item = u32>, d: u32, r: u32) -> i64 {
    let di = d as i64;
    let mut slope_total = 0i64;
    let mut local = 0i64;
    for sg in slope_counts {
        slope_total += sg as i64;
        if let Some(v) = VertexStarData::new(sg, r) {
            local += v.contribution(d);
        }
    }
    binom(di + 2, 2) as i64
        + (edges as i64 - slope_total) * binom(di + 1 - r as i64, 2) as i64
        + local
}

pub fn schumaker_lower_bound(tri: &Triangulation, d: u32, r: u32) -> i64 {
    schumaker_lower_bound_partition(&tri.as_partition(), d, r)
}

/// The same bound on a partition with erased edges.
pub fn schumaker_lower_bound_partition(part: &Partition<'_>, d: u32, r: u32) -> i64 {
    let counts = part
        .interior_vertices()
        .map(|v| part.slope_count(v).expect("interior vertex") as u32);
    lower_bound_from(part.interior_edges().count(), counts, d, r)
}

/// `L(Δ)` for a triangulation whose interior edges all meet `v1` or `v2`.
pub fn schumaker_lower_bound_params(c: TieCounts, d: u32, r: u32) -> i64 {
    lower_bound_from((c.p + c.q + 1) as usize, [c.s + 1, c.t + 1].into_iter(), d, r)
}

/// `L(Δ')` after erasing the totally interior edge.
pub fn schumaker_lower_bound_prime(c: TieCounts, d: u32, r: u32) -> i64 {
    lower_bound_from((c.p + c.q) as usize, [c.s, c.t].into_iter(), d, r)
}

/// Source of the two lower bounds used by the single-edge formulas.
pub trait LowerBounds {
    fn counts(&self) -> TieCounts;
    /// `L(Δ, d, r)`.
    fn lower_bound(&self, d: u32, r: u32) -> i64;
    /// `L(Δ', d, r)`.
    fn lower_bound_prime(&self, d: u32, r: u32) -> i64;
    fn slope_collision(&self) -> bool {
        false
    }
}

/// Parameterized star: only the edges at `v1` and `v2` are interior.
impl LowerBounds for TieCounts {
    fn counts(&self) -> TieCounts {
        *self
    }

    fn lower_bound(&self, d: u32, r: u32) -> i64 {
        schumaker_lower_bound_params(*self, d, r)
    }

    fn lower_bound_prime(&self, d: u32, r: u32) -> i64 {
        schumaker_lower_bound_prime(*self, d, r)
    }
}

/// A concrete mesh; bounds are computed from its full edge and vertex data.
#[derive(Clone, Debug)]
pub struct MeshTie<'a> {
    tri: &'a Triangulation,
    params: OneTieParams,
}

impl<'a> MeshTie<'a> {
    pub fn new(tri: &'a Triangulation, params: OneTieParams) -> Self {
        Self { tri, params }
    }

    pub fn params(&self) -> &OneTieParams {
        &self.params
    }

    pub fn prime_partition(&self) -> Partition<'a> {
        Partition::without_edges(self.tri, &[self.params.tau])
    }
}

impl LowerBounds for MeshTie<'_> {
    fn counts(&self) -> TieCounts {
        self.params.counts()
    }

    fn lower_bound(&self, d: u32, r: u32) -> i64 {
        schumaker_lower_bound(self.tri, d, r)
    }

    fn lower_bound_prime(&self, d: u32, r: u32) -> i64 {
        schumaker_lower_bound_partition(&self.prime_partition(), d, r)
    }

    fn slope_collision(&self) -> bool {
        self.params.trivial_slope_collision
    }
}
