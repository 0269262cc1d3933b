//! Brute-force dimensions by exact linear algebra.
//!
//! Nothing here uses the closed forms: spline spaces are the kernel of the
//! divisibility conditions across interior edges, and ideal Hilbert functions
//! are ranks of explicit spanning sets. These are the ground truth the closed
//! forms are tested against.

mod ideal;
mod poly;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{integer_row, rank_of_integer_rows};
use crate::triangulation::{Partition, Triangulation};

pub use self::ideal::{
    colon_intersection_oracle, colon_sum_oracle, hilbert_colon_oracle, hilbert_ideal_oracle,
    homology_dim_oracle, homology_dims_oracle,
};
pub use self::poly::{LinearForm, LinearForm2, LinearForm3, PolyBasisIndex};
use self::poly::Ring;

/// Column count above which [`dim_spline_oracle`] refuses to run unless
/// [`OracleOptions::allow_large`] is set.
pub const MAX_COLUMNS: usize = 5000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleOptions {
    pub allow_large: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The unknowns would exceed [`MAX_COLUMNS`].
    TooLarge { columns: usize },
    /// Slopes repeat or include zero.
    DegenerateSlopes,
    ZeroForm,
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TooLarge { .. } => "TooLarge",
            Self::DegenerateSlopes => "DegenerateSlopes",
            Self::ZeroForm => "ZeroForm",
        }
    }
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooLarge { columns } => write!(
                f,
                "TooLarge: {columns} unknowns exceed the limit of {MAX_COLUMNS} (pass --allow-large to override)"
            ),
            Self::DegenerateSlopes => write!(f, "DegenerateSlopes: slopes must be distinct and nonzero"),
            Self::ZeroForm => write!(f, "ZeroForm: a linear form must be nonzero"),
        }
    }
}

impl core::error::Error for OracleError {}

/// `dim C^r_d` of a triangulation by exact linear algebra.
pub fn dim_spline_oracle(tri: &Triangulation, d: u32, r: u32) -> Result<u64, OracleError> {
    dim_spline_oracle_with(tri, d, r, OracleOptions::default())
}

pub fn dim_spline_oracle_with(
    tri: &Triangulation,
    d: u32,
    r: u32,
    options: OracleOptions,
) -> Result<u64, OracleError> {
    dim_partition_oracle(&tri.as_partition(), d, r, options)
}

/// The same computation on a partition whose cells are unions of triangles.
///
/// Unknowns are one polynomial `F` of degree `d` per cell and one multiplier
/// `h` of degree `d-r-1` per interior edge, subject to
/// `F_a - F_b = ℓ^{r+1} h` across each edge with affine form `ℓ`. Polynomials
/// are homogenized, which identifies degree `<= d` in `x, y` with degree `d`
/// in `x, y, z`.
///
/// The `F` unknowns are eliminated along a spanning tree of the cell
/// adjacency graph: each cell's polynomial is the root's plus a signed sum of
/// `ℓ^{r+1} h` along its tree path. Every non-tree edge then closes a cycle
/// whose conditions involve the multipliers only, and
/// `dim = dim R_d + #multiplier unknowns - rank(cycle conditions)`.
pub fn dim_partition_oracle(
    part: &Partition<'_>,
    d: u32,
    r: u32,
    options: OracleOptions,
) -> Result<u64, OracleError> {
    let tri = part.triangulation();
    let (cell_of, ncells) = part.cells();
    let edges: Vec<usize> = part.interior_edges().collect();
    let ring = Ring::new(3);
    let n = ring.dim(d);
    let hdeg = d.checked_sub(r + 1);
    let hdim = hdeg.map_or(0, |k| ring.dim(k));
    let columns = ncells * n + edges.len() * hdim;
    if columns > MAX_COLUMNS && !options.allow_large {
        return Err(OracleError::TooLarge { columns });
    }
    let Some(hdeg) = hdeg else {
        // No room for a multiplier: all cells carry one global polynomial.
        return Ok(n as u64);
    };

    // Equation k reads F[sides[k].0] - F[sides[k].1] - P_k h_k = 0.
    let sides: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e| {
            let t = &tri.edge(e).triangles;
            (cell_of[t[0]], cell_of[t[1]])
        })
        .collect();
    let mut adjacency = vec![Vec::new(); ncells];
    for (k, &(x, y)) in sides.iter().enumerate() {
        adjacency[x].push(k);
        adjacency[y].push(k);
    }
    // path[c][k]: coefficient of P_k h_k in F_c - F_root.
    let mut path: Vec<Option<Vec<i64>>> = vec![None; ncells];
    let mut in_tree = vec![false; edges.len()];
    path[0] = Some(vec![0; edges.len()]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for &k in &adjacency[c] {
            let (x, y) = sides[k];
            let child = if x == c { y } else { x };
            if path[child].is_some() {
                continue;
            }
            let mut p = path[c].clone().expect("visited");
            p[k] += if child == y { -1 } else { 1 };
            path[child] = Some(p);
            in_tree[k] = true;
            queue.push_back(child);
        }
    }
    let path: Vec<Vec<i64>> = path.into_iter().map(|p| p.expect("cells are connected")).collect();

    // Multiplication-by-ℓ^{r+1} blocks, one column per multiplier monomial.
    let blocks: Vec<Vec<Vec<BigInt>>> = edges
        .iter()
        .map(|&e| {
            let form = edge_form(tri, e);
            let p = ring.power(&form, r + 1);
            ring.multiples(&p, r + 1, hdeg)
        })
        .collect();

    let cols = edges.len() * hdim;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (k, &(x, y)) in sides.iter().enumerate() {
        if in_tree[k] {
            continue;
        }
        let mut coef: Vec<i64> = path[x].iter().zip(&path[y]).map(|(a, b)| a - b).collect();
        coef[k] -= 1;
        let mut block_rows = vec![vec![BigInt::zero(); cols]; n];
        for (j, &c) in coef.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            for (m, column) in blocks[j].iter().enumerate() {
                for (i, v) in column.iter().enumerate() {
                    if !v.is_zero() {
                        block_rows[i][j * hdim + m] = &c * v;
                    }
                }
            }
        }
        rows.extend(block_rows);
    }
    let rank = rank_of_integer_rows(&rows, cols);
    Ok((n + cols - rank) as u64)
}

/// Primitive integer coefficients of an affine form vanishing on edge `e`.
fn edge_form(tri: &Triangulation, e: usize) -> Vec<BigInt> {
    let edge = tri.edge(e);
    let (p, q) = (&tri.vertices()[edge.a], &tri.vertices()[edge.b]);
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = -(&a * &p.x + &b * &p.y);
    integer_row(&[a, b, c])
}

#[cfg(test)]
mod tests;
