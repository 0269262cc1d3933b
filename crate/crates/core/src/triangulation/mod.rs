//! Exact-coordinate planar triangulations.
//!
//! A [`Triangulation`] is built from rational vertex coordinates and index
//! triples and is fully validated on construction: no degenerate or
//! overlapping triangles, no hanging vertices, and the union of the
//! triangles is a closed disk whose boundary is a single simple polygon.

mod partition;
pub mod samples;
mod tie;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, Rational};

pub use self::partition::Partition;
pub use self::tie::{extract_one_tie_params, OneTieParams, TieCounts};

/// A point in the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Twice the signed area of `abc`; positive when counterclockwise.
pub(crate) fn orient(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Direction of a line as a primitive integer vector with canonical sign,
/// so that parallel edges compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    dx: BigInt,
    dy: BigInt,
}

impl Slope {
    /// Slope of the line through two distinct points.
    pub fn between(a: &Point2, b: &Point2) -> Self {
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        assert!(!(dx.is_zero() && dy.is_zero()), "slope of a degenerate segment");
        let l = dx.denom().lcm(dy.denom());
        let mut ix = dx.numer() * (&l / dx.denom());
        let mut iy = dy.numer() * (&l / dy.denom());
        let g = ix.gcd(&iy);
        ix /= &g;
        iy /= &g;
        if ix.is_negative() || (ix.is_zero() && iy.is_negative()) {
            ix = -ix;
            iy = -iy;
        }
        Self { dx: ix, dy: iy }
    }

    pub fn dx(&self) -> &BigInt {
        &self.dx
    }

    pub fn dy(&self) -> &BigInt {
        &self.dy
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Boundary,
    Interior,
    TotallyInterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Boundary,
    Interior,
}

/// An undirected edge `a < b` with its incident triangles (one or two).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
    pub triangles: Vec<usize>,
    pub slope: Slope,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

/// Reasons a mesh is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeshError {
    IndexOutOfRange { triangle: usize, index: usize },
    DuplicateVertex { first: usize, second: usize },
    DegenerateTriangle { triangle: usize },
    NonManifoldEdge { a: usize, b: usize },
    HangingVertex { vertex: usize, a: usize, b: usize },
    DisconnectedOrHoley,
    NotInteriorVertex { vertex: usize },
    NoTotallyInteriorEdge,
    MultipleTotallyInteriorEdges { count: usize },
    SingularMap,
}

impl MeshError {
    /// Stable identifier used in reports and by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Self::IndexOutOfRange { .. } => "IndexOutOfRange",
            Self::DuplicateVertex { .. } => "DuplicateVertex",
            Self::DegenerateTriangle { .. } => "DegenerateTriangle",
            Self::NonManifoldEdge { .. } => "NonManifoldEdge",
            Self::HangingVertex { .. } => "HangingVertex",
            Self::DisconnectedOrHoley => "DisconnectedOrHoley",
            Self::NotInteriorVertex { .. } => "NotInteriorVertex",
            Self::NoTotallyInteriorEdge => "NoTotallyInteriorEdge",
            Self::MultipleTotallyInteriorEdges { .. } => "MultipleTotallyInteriorEdges",
            Self::SingularMap => "SingularMap",
        }
    }
}

impl fmt::Display for MeshError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name())?;
        match self {
            Self::IndexOutOfRange { triangle, index } => {
                write!(f, "triangle {triangle} refers to missing vertex {index}")
            }
            Self::DuplicateVertex { first, second } => {
                write!(f, "vertices {first} and {second} coincide")
            }
            Self::DegenerateTriangle { triangle } => write!(f, "triangle {triangle} has zero area"),
            Self::NonManifoldEdge { a, b } => {
                write!(f, "edge {a}-{b} is not shared consistently by at most two triangles")
            }
            Self::HangingVertex { vertex, a, b } => {
                write!(f, "vertex {vertex} lies inside edge {a}-{b}")
            }
            Self::DisconnectedOrHoley => {
                write!(f, "triangles do not form a disk bounded by one simple polygon")
            }
            Self::NotInteriorVertex { vertex } => write!(f, "vertex {vertex} is on the boundary"),
            Self::NoTotallyInteriorEdge => write!(f, "no edge joins two interior vertices"),
            Self::MultipleTotallyInteriorEdges { count } => {
                write!(f, "{count} edges join two interior vertices; exactly one is supported")
            }
            Self::SingularMap => write!(f, "affine map is not invertible"),
        }
    }
}

impl core::error::Error for MeshError {}

/// A validated triangulation of a polygonal disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    vertices: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    edge_index: BTreeMap<(usize, usize), usize>,
    vertex_kinds: Vec<VertexKind>,
    vertex_edges: Vec<Vec<usize>>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Whether `w` lies on the open segment `ab`.
fn strictly_inside_segment(w: &Point2, a: &Point2, b: &Point2) -> bool {
    if !orient(a, b, w).is_zero() {
        return false;
    }
    let between = |p: &Rational, q: &Rational, x: &Rational| {
        (p < x && x < q) || (q < x && x < p)
    };
    if a.x != b.x {
        between(&a.x, &b.x, &w.x)
    } else {
        between(&a.y, &b.y, &w.y)
    }
}

/// Whether closed segments `ab` and `cd` share at least one point.
fn segments_touch(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let sign = |q: Rational| q.cmp(&Rational::zero());
    let o1 = sign(orient(a, b, c));
    let o2 = sign(orient(a, b, d));
    let o3 = sign(orient(c, d, a));
    let o4 = sign(orient(c, d, b));
    let on = |p: &Point2, q: &Point2, w: &Point2| {
        let (lx, hx) = if p.x <= q.x { (&p.x, &q.x) } else { (&q.x, &p.x) };
        let (ly, hy) = if p.y <= q.y { (&p.y, &q.y) } else { (&q.y, &p.y) };
        lx <= &w.x && &w.x <= hx && ly <= &w.y && &w.y <= hy
    };
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1 == Ordering::Equal && on(a, b, c))
        || (o2 == Ordering::Equal && on(a, b, d))
        || (o3 == Ordering::Equal && on(c, d, a))
        || (o4 == Ordering::Equal && on(c, d, b))
}

impl Triangulation {
    /// Validates and classifies a mesh. Triangles are reoriented
    /// counterclockwise; their order and the vertex order are preserved.
    pub fn build(vertices: Vec<Point2>, triangles: Vec<[usize; 3]>) -> Result<Self, MeshError> {
        let nv = vertices.len();
        for (ti, tri) in triangles.iter().enumerate() {
            if let Some(&index) = tri.iter().find(|&&i| i >= nv) {
                return Err(MeshError::IndexOutOfRange { triangle: ti, index });
            }
        }
        let mut seen: BTreeMap<&Point2, usize> = BTreeMap::new();
        for (i, p) in vertices.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(MeshError::DuplicateVertex { first, second: i });
            }
            seen.insert(p, i);
        }

        let mut tris = triangles;
        for (ti, tri) in tris.iter_mut().enumerate() {
            let [a, b, c] = *tri;
            let o = orient(&vertices[a], &vertices[b], &vertices[c]);
            if o.is_zero() {
                return Err(MeshError::DegenerateTriangle { triangle: ti });
            }
            if o.is_negative() {
                tri.swap(1, 2);
            }
        }

        // Directed half-edges: a consistent disk uses each at most once.
        let mut half: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut edge_tris: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ti, tri) in tris.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (tri[k], tri[(k + 1) % 3]);
                if half.insert((u, v), ti).is_some() {
                    let (a, b) = key(u, v);
                    return Err(MeshError::NonManifoldEdge { a, b });
                }
                let list = edge_tris.entry(key(u, v)).or_default();
                list.push(ti);
                if list.len() > 2 {
                    let (a, b) = key(u, v);
                    return Err(MeshError::NonManifoldEdge { a, b });
                }
            }
        }

        for &(a, b) in edge_tris.keys() {
            for (w, pw) in vertices.iter().enumerate() {
                if w != a && w != b && strictly_inside_segment(pw, &vertices[a], &vertices[b]) {
                    return Err(MeshError::HangingVertex { vertex: w, a, b });
                }
            }
        }

        let mut vertex_kinds = vec![VertexKind::Interior; nv];
        let mut boundary_next: BTreeMap<usize, usize> = BTreeMap::new();
        for (&(a, b), list) in edge_tris.iter() {
            if list.len() == 1 {
                vertex_kinds[a] = VertexKind::Boundary;
                vertex_kinds[b] = VertexKind::Boundary;
                let (u, v) = if half.contains_key(&(a, b)) { (a, b) } else { (b, a) };
                if boundary_next.insert(u, v).is_some() {
                    return Err(MeshError::DisconnectedOrHoley);
                }
            }
        }

        let ne = edge_tris.len();
        if tris.is_empty() || nv + tris.len() != ne + 1 {
            return Err(MeshError::DisconnectedOrHoley);
        }
        Self::check_boundary_cycle(&vertices, &boundary_next)?;
        Self::check_dual_connected(&tris, &edge_tris)?;

        let mut edges = Vec::with_capacity(ne);
        let mut edge_index = BTreeMap::new();
        let mut vertex_edges = vec![Vec::new(); nv];
        for ((a, b), list) in edge_tris {
            let kind = if list.len() == 1 {
                EdgeKind::Boundary
            } else if vertex_kinds[a] == VertexKind::Interior && vertex_kinds[b] == VertexKind::Interior
            {
                EdgeKind::TotallyInterior
            } else {
                EdgeKind::Interior
            };
            let id = edges.len();
            edge_index.insert((a, b), id);
            vertex_edges[a].push(id);
            vertex_edges[b].push(id);
            let slope = Slope::between(&vertices[a], &vertices[b]);
            edges.push(Edge { a, b, kind, triangles: list, slope });
        }

        Ok(Self { vertices, triangles: tris, edges, edge_index, vertex_kinds, vertex_edges })
    }

    fn check_boundary_cycle(
        vertices: &[Point2],
        next: &BTreeMap<usize, usize>,
    ) -> Result<(), MeshError> {
        let Some((&start, _)) = next.iter().next() else {
            return Err(MeshError::DisconnectedOrHoley);
        };
        let mut cycle = vec![start];
        let mut cur = next[&start];
        while cur != start {
            if cycle.len() > next.len() {
                return Err(MeshError::DisconnectedOrHoley);
            }
            cycle.push(cur);
            cur = *next.get(&cur).ok_or(MeshError::DisconnectedOrHoley)?;
        }
        if cycle.len() != next.len() {
            return Err(MeshError::DisconnectedOrHoley);
        }
        let n = cycle.len();
        let seg = |i: usize| (&vertices[cycle[i]], &vertices[cycle[(i + 1) % n]]);
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (a, b) = seg(i);
                let (c, d) = seg(j);
                if segments_touch(a, b, c, d) {
                    return Err(MeshError::DisconnectedOrHoley);
                }
            }
        }
        Ok(())
    }

    fn check_dual_connected(
        tris: &[[usize; 3]],
        edge_tris: &BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<(), MeshError> {
        let mut adj = vec![Vec::new(); tris.len()];
        for list in edge_tris.values() {
            if let [x, y] = list[..] {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let mut seen = vec![false; tris.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(MeshError::DisconnectedOrHoley)
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Triangles as counterclockwise index triples.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Id of the edge joining `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&key(a, b)).copied()
    }

    pub fn vertex_kind(&self, v: usize) -> VertexKind {
        self.vertex_kinds[v]
    }

    /// Ids of the edges containing `v`.
    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.vertex_kinds[v] == VertexKind::Interior)
    }

    /// Interior and totally interior edges.
    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].kind != EdgeKind::Boundary)
    }

    pub fn totally_interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].kind == EdgeKind::TotallyInterior)
    }

    /// Number of distinct slopes among the edges at an interior vertex.
    pub fn slope_count(&self, v: usize) -> Result<usize, MeshError> {
        Partition::whole(self).slope_count(v)
    }

    /// The triangulation viewed as a partition with nothing removed.
    pub fn as_partition(&self) -> Partition<'_> {
        Partition::whole(self)
    }

    pub fn is_quasi_cross_cut(&self) -> bool {
        self.as_partition().is_quasi_cross_cut()
    }

    /// Image under `map`, with identical combinatorics.
    pub fn affine_transform(&self, map: &AffineMap) -> Result<Self, MeshError> {
        if map.determinant().is_zero() {
            return Err(MeshError::SingularMap);
        }
        let vertices = self.vertices.iter().map(|p| map.apply(p)).collect();
        Self::build(vertices, self.triangles.clone())
    }
}

/// `p ↦ M p + b` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub m: [[Rational; 2]; 2],
    pub b: [Rational; 2],
}

impl AffineMap {
    pub fn identity() -> Self {
        let one = Rational::one();
        let zero = Rational::zero();
        Self {
            m: [[one.clone(), zero.clone()], [zero.clone(), one]],
            b: [zero.clone(), zero],
        }
    }

    pub fn determinant(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.b[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.b[1],
        )
    }
}
