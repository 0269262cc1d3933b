use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{integer_row, kernel_basis, rank_of_integer_rows, Rational};

use super::poly::{LinearForm, Ring};
use super::OracleError;

type Generators = Vec<(Vec<BigInt>, u32)>;

fn integer_generators<const N: usize>(generators: &[(LinearForm<N>, u32)]) -> Generators {
    generators.iter().map(|(f, e)| (f.integer_coeffs(), *e)).collect()
}

/// Degree-`d` dimension of the ideal generated by `form^exponent` pairs.
pub fn hilbert_ideal_oracle<const N: usize>(generators: &[(LinearForm<N>, u32)], d: u32) -> u64 {
    let ring = Ring::new(N);
    let rows = ring.ideal_rows(&integer_generators(generators), d);
    rank_of_integer_rows(&rows, ring.dim(d)) as u64
}

/// Degree-`d` dimension of `J : form^e`.
///
/// Multiplication by `form^e` is injective, so the image of
/// `f ↦ f form^e mod J` has dimension `rank[J; form^e R_d] - rank J`, and the
/// colon ideal is the kernel of that map.
pub fn hilbert_colon_oracle<const N: usize>(
    generators: &[(LinearForm<N>, u32)],
    form: &LinearForm<N>,
    e: u32,
    d: u32,
) -> u64 {
    let ring = Ring::new(N);
    let colon = Colon::new(ring, integer_generators(generators), form, e, d);
    colon.dim()
}

/// The pieces of one colon computation in a fixed degree.
struct Colon {
    ring: Ring,
    d: u32,
    e: u32,
    ideal: Vec<Vec<BigInt>>,
    ideal_rank: usize,
    multiples: Vec<Vec<BigInt>>,
}

impl Colon {
    fn new<const N: usize>(ring: Ring, gens: Generators, form: &LinearForm<N>, e: u32, d: u32) -> Self {
        let ideal = ring.ideal_rows(&gens, d + e);
        let ideal_rank = rank_of_integer_rows(&ideal, ring.dim(d + e));
        let g = ring.power(&form.integer_coeffs(), e);
        let multiples = ring.multiples(&g, e, d);
        Self { ring, d, e, ideal, ideal_rank, multiples }
    }

    fn dim(&self) -> u64 {
        let mut rows = self.ideal.clone();
        rows.extend(self.multiples.iter().cloned());
        let image = rank_of_integer_rows(&rows, self.ring.dim(self.d + self.e)) - self.ideal_rank;
        (self.ring.dim(self.d) - image) as u64
    }
}

/// Degree-`d` dimension of `(J_1 : g^e) ∩ (J_2 : g^e)`.
///
/// `f` lies in both colons exactly when `(f g^e, f g^e)` vanishes in
/// `R/J_1 ⊕ R/J_2`. Stacking `(g^e m | g^e m)`, `(J_1 | 0)` and `(0 | J_2)`
/// measures the image of that map as `rank - rank J_1 - rank J_2`.
pub fn colon_intersection_oracle<const N: usize>(
    first: &[(LinearForm<N>, u32)],
    second: &[(LinearForm<N>, u32)],
    form: &LinearForm<N>,
    e: u32,
    d: u32,
) -> u64 {
    let ring = Ring::new(N);
    let c1 = Colon::new(ring, integer_generators(first), form, e, d);
    let c2 = Colon::new(ring, integer_generators(second), form, e, d);
    intersection_dim(&c1, &c2)
}

fn intersection_dim(c1: &Colon, c2: &Colon) -> u64 {
    let width = c1.ring.dim(c1.d + c1.e);
    let zeros = vec![BigInt::zero(); width];
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for m in &c1.multiples {
        rows.push(m.iter().chain(m).cloned().collect());
    }
    for j in &c1.ideal {
        rows.push(j.iter().chain(&zeros).cloned().collect());
    }
    for j in &c2.ideal {
        rows.push(zeros.iter().chain(j).cloned().collect());
    }
    let image = rank_of_integer_rows(&rows, 2 * width) - c1.ideal_rank - c2.ideal_rank;
    (c1.ring.dim(c1.d) - image) as u64
}

/// Degree-`d` dimension of `(J_1 : g^e) + (J_2 : g^e)`, by
/// inclusion-exclusion over the intersection.
pub fn colon_sum_oracle<const N: usize>(
    first: &[(LinearForm<N>, u32)],
    second: &[(LinearForm<N>, u32)],
    form: &LinearForm<N>,
    e: u32,
    d: u32,
) -> u64 {
    let ring = Ring::new(N);
    let c1 = Colon::new(ring, integer_generators(first), form, e, d);
    let c2 = Colon::new(ring, integer_generators(second), form, e, d);
    c1.dim() + c2.dim() - intersection_dim(&c1, &c2)
}

fn check_slopes(values: &[Rational], count: u32) -> Result<(), OracleError> {
    let distinct: BTreeSet<&Rational> = values.iter().collect();
    if values.len() != count as usize || distinct.len() != values.len() || values.iter().any(Zero::is_zero) {
        return Err(OracleError::DegenerateSlopes);
    }
    Ok(())
}

/// Spanning sets of `(J : z^e)_k` for `k = 0..=kmax`, where `J` is
/// generated by `(u + b_i z)^e` in the two variables `u, z`. Vectors are in
/// the two-variable column order, where `u^{k-i} z^i` sits at `i`.
fn two_variable_colons(slopes: &[Rational], e: u32, kmax: u32) -> Vec<Vec<Vec<BigInt>>> {
    let ring = Ring::new(2);
    let gens: Generators = slopes
        .iter()
        .map(|b| (integer_row(&[Rational::one(), b.clone()]), e))
        .collect();
    let mut z_e = vec![BigInt::zero(); ring.dim(e)];
    z_e[ring.index([0, e, 0])] = BigInt::one();
    (0..=kmax)
        .map(|k| {
            // Unknowns (f, λ) with f z^e - Σ λ_j g_j = 0 in degree k + e.
            let fz = ring.multiples(&z_e, e, k);
            let ideal = ring.ideal_rows(&gens, k + e);
            let height = ring.dim(k + e);
            let width = fz.len() + ideal.len();
            let mut matrix = vec![vec![BigInt::zero(); width]; height];
            for (j, col) in fz.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    matrix[i][j] = v.clone();
                }
            }
            for (j, col) in ideal.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    matrix[i][fz.len() + j] = -v;
                }
            }
            kernel_basis(&matrix, width)
                .into_iter()
                .map(|mut v| {
                    v.truncate(fz.len());
                    v
                })
                .filter(|v| v.iter().any(|x| !x.is_zero()))
                .collect()
        })
        .collect()
}

/// Homology dimension in every degree `0..=dmax` for the configuration
/// `J_1 = <(x + b_i z)^{r+1}>`, `J_2 = <(y + c_j z)^{r+1}>`, `J(τ) = <z^{r+1}>`:
/// the quotient of `R` by `(J_1 : z^{r+1}) + (J_2 : z^{r+1})`, shifted by
/// `r + 1`.
///
/// `J_1` lives in `x, z`, so its colon is the extension of the two-variable
/// colon: the degree-`D` piece is the direct sum of `y^b` times the
/// two-variable piece in degree `D - b`. Bases of those small pieces are
/// computed exactly, lifted to three variables, and stacked with their
/// counterparts from `J_2`; the rank of the stack is the dimension of the sum.
pub fn homology_dims_oracle(
    s: u32,
    t: u32,
    r: u32,
    b: &[Rational],
    c: &[Rational],
    dmax: u32,
) -> Result<Vec<u64>, OracleError> {
    check_slopes(b, s)?;
    check_slopes(c, t)?;
    let mut out = vec![0u64; dmax as usize + 1];
    let Some(top) = dmax.checked_sub(r + 1) else {
        return Ok(out);
    };
    let w1 = two_variable_colons(b, r + 1, top);
    let w2 = two_variable_colons(c, r + 1, top);
    let ring = Ring::new(3);
    for big_d in 0..=top {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for lift in 0..=big_d {
            let k = big_d - lift;
            for w in &w1[k as usize] {
                let mut row = vec![BigInt::zero(); ring.dim(big_d)];
                for (i, v) in w.iter().enumerate() {
                    let i = i as u32;
                    row[ring.index([k - i, lift, i])] = v.clone();
                }
                rows.push(row);
            }
            for w in &w2[k as usize] {
                let mut row = vec![BigInt::zero(); ring.dim(big_d)];
                for (i, v) in w.iter().enumerate() {
                    let i = i as u32;
                    row[ring.index([lift, k - i, i])] = v.clone();
                }
                rows.push(row);
            }
        }
        let n = ring.dim(big_d);
        out[(big_d + r + 1) as usize] = (n - rank_of_integer_rows(&rows, n)) as u64;
    }
    Ok(out)
}

/// Homology dimension in degree `d`; see [`homology_dims_oracle`].
pub fn homology_dim_oracle(
    s: u32,
    t: u32,
    r: u32,
    b: &[Rational],
    c: &[Rational],
    d: u32,
) -> Result<u64, OracleError> {
    Ok(homology_dims_oracle(s, t, r, b, c, d)?[d as usize])
}
