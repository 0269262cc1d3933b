use core::cmp::Ordering;

use super::{MeshError, Triangulation};

/// The four integers that drive every closed form: `p` and `q` edges other
/// than the totally interior edge at its two endpoints, carrying `s` and `t`
/// slopes other than its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TieCounts {
    pub p: u32,
    pub q: u32,
    pub s: u32,
    pub t: u32,
}

impl TieCounts {
    pub fn new(p: u32, q: u32, s: u32, t: u32) -> Self {
        Self { p, q, s, t }
    }

    /// At least `r+3` slopes meet at one endpoint, so the homology vanishes.
    pub fn trivial_many_slopes(&self, r: u32) -> bool {
        self.s.max(self.t) + 1 >= r + 3
    }
}

/// Parameters of a triangulation with exactly one totally interior edge
/// `tau = v1 v2`, labelled so that `s <= t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneTieParams {
    pub tau: usize,
    pub v1: usize,
    pub v2: usize,
    pub p: u32,
    pub q: u32,
    pub s: u32,
    pub t: u32,
    /// Some other edge at `v1` or `v2` is parallel to `tau`.
    pub trivial_slope_collision: bool,
}

impl OneTieParams {
    pub fn counts(&self) -> TieCounts {
        TieCounts::new(self.p, self.q, self.s, self.t)
    }

    pub fn trivial_many_slopes(&self, r: u32) -> bool {
        self.counts().trivial_many_slopes(r)
    }

    /// Whether the spline module is free for this `r`, making the lower
    /// bound exact in every degree.
    pub fn is_trivial(&self, r: u32) -> bool {
        self.trivial_slope_collision || self.trivial_many_slopes(r)
    }
}

/// Locates the unique totally interior edge and reads off its parameters.
/// The parameters do not depend on `r`; see [`OneTieParams::is_trivial`].
pub fn extract_one_tie_params(tri: &Triangulation) -> Result<OneTieParams, MeshError> {
    let ties: alloc::vec::Vec<usize> = tri.totally_interior_edges().collect();
    let tau = match ties[..] {
        [] => return Err(MeshError::NoTotallyInteriorEdge),
        [e] => e,
        _ => return Err(MeshError::MultipleTotallyInteriorEdges { count: ties.len() }),
    };
    let edge = tri.edge(tau);
    let star = |v: usize| -> (u32, u32, bool) {
        let others = tri.edges_at(v).iter().filter(|&&e| e != tau);
        let p = others.clone().count() as u32;
        let collision = others.clone().any(|&e| tri.edge(e).slope == edge.slope);
        let slopes = tri.slope_count(v).expect("endpoints of a totally interior edge are interior");
        (p, slopes as u32 - 1, collision)
    };
    let (pa, sa, ca) = star(edge.a);
    let (pb, sb, cb) = star(edge.b);
    let verts = tri.vertices();
    let order = sa
        .cmp(&sb)
        .then(pa.cmp(&pb))
        .then_with(|| verts[edge.a].cmp(&verts[edge.b]));
    let (v1, p, s, v2, q, t) = match order {
        Ordering::Greater => (edge.b, pb, sb, edge.a, pa, sa),
        _ => (edge.a, pa, sa, edge.b, pb, sb),
    };
    Ok(OneTieParams { tau, v1, v2, p, q, s, t, trivial_slope_collision: ca || cb })
}
