//! Certified rank over the rationals from computations modulo word-size
//! primes.
//!
//! Two facts are combined. Reduction modulo a prime never increases rank, so
//! the largest rank `r*` seen modulo any prime is a lower bound. For the upper
//! bound a kernel basis of dimension `cols - r*` is reconstructed from its
//! residues (Chinese remaindering followed by rational reconstruction) and
//! checked exactly. Rank-nullity then pins the rank to `r*`.
//!
//! The exact check multiplies the matrix by the integer kernel vectors modulo
//! enough primes that the product of the primes exceeds an explicit bound on
//! every entry of the result; a product that vanishes modulo all of them is
//! zero.
//!
//! Reconstruction needs only as many primes as the kernel entries need, which
//! is usually far fewer than Hadamard's bound on minors. That bound is kept as
//! a fallback so the loop always terminates with a proven answer.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::minor_bound_bits;
use super::modular::{rank_mod_p, reduce_rows, rref_mod_p, Montgomery, Primes, PRIME_BITS};

/// Kernel residues for one pivot pattern, accumulated over several primes.
struct KernelCrt {
    pivots: Vec<usize>,
    free: Vec<usize>,
    /// `values[i][f]`: coordinate at `pivots[i]` of the kernel vector that is
    /// one at `free[f]` and zero at the other free columns.
    values: Vec<Vec<BigInt>>,
    modulus: BigInt,
    primes: usize,
}

impl KernelCrt {
    fn new(pivots: Vec<usize>, cols: usize) -> Self {
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let values = vec![vec![BigInt::zero(); free.len()]; pivots.len()];
        Self { pivots, free, values, modulus: BigInt::one(), primes: 0 }
    }

    /// Folds in the reduced echelon rows computed modulo `p`.
    fn absorb(&mut self, p: u64, reduced: &[Vec<u64>]) {
        let pb = BigInt::from(p);
        // m^{-1} mod p, with m the modulus so far.
        let m_inv = if self.primes == 0 { 0 } else { inv_mod(residue(&self.modulus, p), p) };
        for (i, row) in reduced.iter().enumerate() {
            for (f, &col) in self.free.iter().enumerate() {
                // Kernel coordinate is minus the echelon entry.
                let r = if row[col] == 0 { 0 } else { p - row[col] };
                let x = &mut self.values[i][f];
                if self.primes == 0 {
                    *x = BigInt::from(r);
                } else {
                    let x_mod_p = residue(x, p);
                    let delta = mul_mod(sub_mod(r, x_mod_p, p), m_inv, p);
                    if delta != 0 {
                        *x += &self.modulus * BigInt::from(delta);
                    }
                }
            }
        }
        self.modulus *= pb;
        self.primes += 1;
    }

    /// Integer kernel vectors, one per free column, if every coordinate
    /// admits a rational reconstruction.
    fn reconstruct(&self, cols: usize) -> Option<Vec<Vec<BigInt>>> {
        let bound = (&self.modulus >> 1u32).sqrt();
        let mut out = Vec::with_capacity(self.free.len());
        for (f, &fc) in self.free.iter().enumerate() {
            let mut fracs = Vec::with_capacity(self.pivots.len());
            let mut lcm = BigInt::one();
            for i in 0..self.pivots.len() {
                let (n, d) = rational_reconstruction(&self.values[i][f], &self.modulus, &bound)?;
                lcm = lcm.lcm(&d);
                fracs.push((n, d));
            }
            let mut v = vec![BigInt::zero(); cols];
            v[fc] = lcm.clone();
            for (i, (n, d)) in fracs.into_iter().enumerate() {
                v[self.pivots[i]] = n * (&lcm / d);
            }
            out.push(v);
        }
        Some(out)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let field = Montgomery::new(p);
    field.decode(field.inv(field.encode(a)))
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let field = Montgomery::new(p);
    field.decode(field.reduce(x))
}

/// The fraction `n/d` with `|n|, d <= bound` congruent to `u` modulo `m`,
/// by the half-extended Euclidean algorithm. Unique when `2 bound^2 < m`.
fn rational_reconstruction(u: &BigInt, m: &BigInt, bound: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r2) = r0.div_rem(&r1);
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// Exact test of `A v = 0` for every candidate `v`.
fn annihilates(rows: &[Vec<BigInt>], kernel: &[Vec<BigInt>]) -> bool {
    let row_bits = rows
        .iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<BigInt>().bits())
        .max()
        .unwrap_or(0);
    let vec_bits = kernel.iter().flatten().map(|x| x.bits()).max().unwrap_or(0);
    // |(A v)_i| <= (sum_j |a_ij|) * max |v_j| < 2^(row_bits + vec_bits).
    let needed = row_bits + vec_bits + 1;
    let mut covered = 0u64;
    for p in Primes::new() {
        let field = Montgomery::new(p);
        let a = reduce_rows(&field, rows);
        let k = reduce_rows(&field, kernel);
        for v in &k {
            for row in &a {
                let mut acc = 0u64;
                for (x, y) in row.iter().zip(v) {
                    if *x != 0 && *y != 0 {
                        acc = field.sub(acc, field.sub(0, field.mul(*x, *y)));
                    }
                }
                if acc != 0 {
                    return false;
                }
            }
        }
        covered += PRIME_BITS;
        if covered > needed {
            return true;
        }
    }
    unreachable!("exhausted primes while checking a kernel")
}

fn transpose(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    (0..cols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Exact rank over the rationals, certified as described in the module docs.
pub fn rank_multimodular(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let full = rows.len().min(cols);
    if full == 0 {
        return 0;
    }
    let mut primes = Primes::new();
    let first = rank_mod_p(rows, cols, primes.next().expect("prime supply"));
    if first == full {
        return full;
    }
    // Certify through whichever kernel (right or left) is smaller.
    if rows.len() < cols {
        let t = transpose(rows, cols);
        certify(&t, rows.len(), primes, Goal::Rank).0
    } else {
        certify(rows, cols, primes, Goal::Rank).0
    }
}

/// Basis of the right null space of an integer matrix, as integer vectors.
/// Each vector is nonzero at exactly one non-pivot column.
pub fn kernel_basis(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    if cols == 0 {
        return Vec::new();
    }
    if rows.is_empty() {
        return (0..cols)
            .map(|j| {
                let mut v = vec![BigInt::zero(); cols];
                v[j] = BigInt::one();
                v
            })
            .collect();
    }
    certify(rows, cols, Primes::new(), Goal::Kernel).1
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Rank,
    Kernel,
}

fn certify(rows: &[Vec<BigInt>], cols: usize, primes: Primes, goal: Goal) -> (usize, Vec<Vec<BigInt>>) {
    let full = rows.len().min(cols);
    let mut best: Option<KernelCrt> = None;
    let mut best_rank = 0usize;
    let mut next_attempt = 1usize;
    let mut bits = 0u64;
    let mut hadamard: Option<(usize, u64)> = None;
    for p in primes {
        let (rank, pivots, reduced) = rref_mod_p(rows, cols, p);
        bits += PRIME_BITS;
        let replace = match &best {
            None => true,
            Some(crt) => rank > best_rank || (rank == best_rank && pivots < crt.pivots),
        };
        if replace {
            best_rank = rank;
            best = Some(KernelCrt::new(pivots.clone(), cols));
            next_attempt = 1;
        }
        if best_rank == cols || (goal == Goal::Rank && best_rank == full) {
            return (best_rank, Vec::new());
        }
        let crt = best.as_mut().expect("set above");
        if rank == best_rank && pivots == crt.pivots {
            crt.absorb(p, &reduced);
            if crt.primes >= next_attempt {
                if let Some(kernel) = crt.reconstruct(cols) {
                    if annihilates(rows, &kernel) {
                        return (best_rank, kernel);
                    }
                }
                next_attempt = crt.primes + crt.primes.div_ceil(2);
            }
        }
        if goal == Goal::Rank {
            let bound = match hadamard {
                Some((k, b)) if k == best_rank => b,
                _ => {
                    let b = minor_bound_bits(rows, cols, best_rank + 1);
                    hadamard = Some((best_rank, b));
                    b
                }
            };
            if bits > bound {
                return (best_rank, Vec::new());
            }
        }
    }
    unreachable!("exhausted primes while certifying rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        let bound = (&m >> 1u32).sqrt();
        for (n, d) in [(3i64, 7i64), (-22, 5), (0, 1), (1, 1), (-1, 12345)] {
            let g = BigInt::from(d).extended_gcd(&m);
            let u = (BigInt::from(n) * g.x).mod_floor(&m);
            assert_eq!(
                rational_reconstruction(&u, &m, &bound),
                Some((BigInt::from(n), BigInt::from(d)))
            );
        }
    }

    #[test]
    fn kernel_check_detects_nonkernel() {
        let rows = vec![vec![BigInt::from(1), BigInt::from(2)]];
        assert!(annihilates(&rows, &[vec![BigInt::from(-2), BigInt::from(1)]]));
        assert!(!annihilates(&rows, &[vec![BigInt::from(1), BigInt::from(1)]]));
    }

    #[test]
    fn deficient_with_huge_entries() {
        // Rows 3 = 2^100 * row 1 + row 2; rank 2 with enormous entries, where
        // the Hadamard route alone would need several primes.
        let big = BigInt::one() << 100u32;
        let r1: Vec<BigInt> = [3, 1, 4, 1, 5].iter().map(|&x| BigInt::from(x)).collect();
        let r2: Vec<BigInt> = [2, 7, 1, 8, 2].iter().map(|&x| BigInt::from(x)).collect();
        let r3: Vec<BigInt> = r1.iter().zip(&r2).map(|(a, b)| a * &big + b).collect();
        let rows = vec![r1, r2, r3];
        assert_eq!(rank_multimodular(&rows, 5), 2);
        assert_eq!(rank_multimodular(&transpose(&rows, 5), 3), 2);
        let k = kernel_basis(&rows, 5);
        assert_eq!(k.len(), 3);
        assert!(annihilates(&rows, &k));
    }

    #[test]
    fn kernel_of_trivial_shapes() {
        assert_eq!(kernel_basis(&[], 2).len(), 2);
        let id = vec![vec![BigInt::one(), BigInt::zero()], vec![BigInt::zero(), BigInt::one()]];
        assert!(kernel_basis(&id, 2).is_empty());
        let half = vec![vec![BigInt::from(2), BigInt::from(-1)]];
        assert_eq!(kernel_basis(&half, 2), vec![vec![BigInt::from(1), BigInt::from(2)]]);
    }
}
