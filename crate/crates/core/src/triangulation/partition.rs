use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{EdgeKind, MeshError, Slope, Triangulation, VertexKind};

/// A triangulation with some interior edges erased. Cells are the unions of
/// triangles glued across erased edges; this models partitions such as the
/// one obtained by deleting the totally interior edge.
#[derive(Clone, Debug)]
pub struct Partition<'a> {
    tri: &'a Triangulation,
    removed: Vec<bool>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Partition<'a> {
    pub fn whole(tri: &'a Triangulation) -> Self {
        Self { tri, removed: vec![false; tri.edges().len()] }
    }

    /// Erases the listed edges. Boundary edges cannot be erased and are
    /// ignored.
    pub fn without_edges(tri: &'a Triangulation, erased: &[usize]) -> Self {
        let mut p = Self::whole(tri);
        for &e in erased {
            if tri.edge(e).kind != EdgeKind::Boundary {
                p.removed[e] = true;
            }
        }
        p
    }

    pub fn triangulation(&self) -> &'a Triangulation {
        self.tri
    }

    pub fn is_removed(&self, e: usize) -> bool {
        self.removed[e]
    }

    /// Interior edges that survive in the partition.
    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.tri.interior_edges().filter(move |&e| !self.removed[e])
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + 'a {
        self.tri.interior_vertices()
    }

    pub fn slope_count(&self, v: usize) -> Result<usize, MeshError> {
        if self.tri.vertex_kind(v) != VertexKind::Interior {
            return Err(MeshError::NotInteriorVertex { vertex: v });
        }
        let slopes: BTreeSet<&Slope> = self
            .tri
            .edges_at(v)
            .iter()
            .filter(|&&e| !self.removed[e])
            .map(|&e| &self.tri.edge(e).slope)
            .collect();
        Ok(slopes.len())
    }

    /// True when every surviving interior edge reaches the boundary through
    /// a chain of adjacent edges that all have its slope.
    pub fn is_quasi_cross_cut(&self) -> bool {
        let edges = self.tri.edges();
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        let interior: Vec<usize> = self.interior_edges().collect();
        for v in 0..self.tri.vertices().len() {
            let at: Vec<usize> =
                self.tri.edges_at(v).iter().copied().filter(|&e| !self.removed[e]).collect();
            for (i, &e) in at.iter().enumerate() {
                for &f in &at[i + 1..] {
                    if edges[e].slope == edges[f].slope {
                        let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                        parent[re] = rf;
                    }
                }
            }
        }
        let mut anchored = vec![false; edges.len()];
        for (e, edge) in edges.iter().enumerate() {
            if self.removed[e] {
                continue;
            }
            let touches = [edge.a, edge.b]
                .iter()
                .any(|&v| self.tri.vertex_kind(v) == VertexKind::Boundary);
            if touches {
                let root = find(&mut parent, e);
                anchored[root] = true;
            }
        }
        interior.into_iter().all(|e| {
            let root = find(&mut parent, e);
            anchored[root]
        })
    }

    /// Cell index of every triangle, and the number of cells.
    pub fn cells(&self) -> (Vec<usize>, usize) {
        let n = self.tri.triangles().len();
        let mut parent: Vec<usize> = (0..n).collect();
        for (e, edge) in self.tri.edges().iter().enumerate() {
            if self.removed[e] {
                let (x, y) = (find(&mut parent, edge.triangles[0]), find(&mut parent, edge.triangles[1]));
                parent[x] = y;
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for (t, slot) in out.iter_mut().enumerate() {
            let root = find(&mut parent, t);
            if label[root] == usize::MAX {
                label[root] = count;
                count += 1;
            }
            *slot = label[root];
        }
        (out, count)
    }
}
