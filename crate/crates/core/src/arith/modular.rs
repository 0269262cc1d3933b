//! Word-size modular arithmetic used by the multimodular rank.
//!
//! Primes are taken just below 2^62 so every one contributes at least 61
//! bits to the certified product.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};

/// Smallest bit count contributed by any prime handed out by [`Primes`].
pub(super) const PRIME_BITS: u64 = 61;

/// Montgomery representation modulo an odd `p < 2^62`, with `R = 2^64`.
#[derive(Clone, Copy, Debug)]
pub(super) struct Montgomery {
    p: u64,
    /// -p^{-1} mod 2^64
    neg_inv: u64,
    /// R^2 mod p
    r2: u64,
}

impl Montgomery {
    pub(super) fn new(p: u64) -> Self {
        debug_assert!(p % 2 == 1 && p < (1 << 62));
        // Newton iteration for p^{-1} mod 2^64.
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Self { p, neg_inv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub(super) fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub(super) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    /// Plain residue in `[0, p)` to Montgomery form.
    pub(super) fn encode(&self, x: u64) -> u64 {
        self.mul(x % self.p, self.r2)
    }

    pub(super) fn decode(&self, x: u64) -> u64 {
        self.redc(x as u128)
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.encode(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero Montgomery-form element.
    pub(super) fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Residue of an arbitrary integer, in Montgomery form.
    pub(super) fn reduce(&self, x: &BigInt) -> u64 {
        let (sign, digits) = x.to_u64_digits();
        let p = self.p as u128;
        let mut acc: u128 = 0;
        for &d in digits.iter().rev() {
            acc = ((acc << 64) | d as u128) % p;
        }
        let mut r = acc as u64;
        if sign == Sign::Minus && r != 0 {
            r = self.p - r;
        }
        self.encode(r)
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub(super) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending sequence of primes below 2^62 (all above 2^61).
pub(super) struct Primes {
    next: u64,
}

impl Primes {
    pub(super) fn new() -> Self {
        Self { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next > (1u64 << 61) {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

/// Reduces every entry into Montgomery form modulo the field's prime.
pub(super) fn reduce_rows(field: &Montgomery, rows: &[Vec<BigInt>]) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|x| if x.sign() == Sign::NoSign { 0 } else { field.reduce(x) })
                .collect()
        })
        .collect()
}

/// Rank of an integer matrix modulo `p`.
pub(super) fn rank_mod_p(rows: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let field = Montgomery::new(p);
    let mut m = reduce_rows(&field, rows);
    eliminate(&field, &mut m, cols, false).0
}

/// Reduced row echelon form modulo `p`: the rank, the pivot columns, and the
/// pivot rows (pivot entries normalized to one, plain residues).
pub(super) fn rref_mod_p(rows: &[Vec<BigInt>], cols: usize, p: u64) -> (usize, Vec<usize>, Vec<Vec<u64>>) {
    let field = Montgomery::new(p);
    let mut m = reduce_rows(&field, rows);
    let (rank, pivots) = eliminate(&field, &mut m, cols, true);
    m.truncate(rank);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = field.decode(*x);
        }
    }
    (rank, pivots, m)
}

/// Gaussian elimination in place; with `full`, entries above each pivot
/// are cleared too.
fn eliminate(field: &Montgomery, m: &mut [Vec<u64>], cols: usize, full: bool) -> (usize, Vec<usize>) {
    let nrows = m.len();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv(m[rank][c]);
        // Normalize the pivot row so eliminations need a single multiply.
        for x in m[rank][c..].iter_mut() {
            if *x != 0 {
                *x = field.mul(*x, inv);
            }
        }
        let (head, tail) = m.split_at_mut(rank);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row");
        let support: Vec<usize> = (c + 1..cols).filter(|&j| pivot_row[j] != 0).collect();
        let clear = |row: &mut Vec<u64>| {
            let f = row[c];
            if f == 0 {
                return;
            }
            row[c] = 0;
            for &j in &support {
                row[j] = field.sub(row[j], field.mul(f, pivot_row[j]));
            }
        };
        below.iter_mut().for_each(clear);
        if full {
            head.iter_mut().for_each(clear);
        }
        pivots.push(c);
        rank += 1;
    }
    (rank, pivots)
}

/// Rank mod `p` of a matrix already reduced to small residues; used in
/// tests to exercise the elimination core directly.
#[cfg(test)]
pub(super) fn rank_mod_p_small(entries: &[Vec<u64>], p: u64) -> usize {
    let field = Montgomery::new(p);
    let cols = entries.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> =
        entries.iter().map(|r| r.iter().map(|&x| field.encode(x)).collect()).collect();
    eliminate(&field, &mut m, cols, false).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn identity(n: usize) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    #[test]
    fn miller_rabin_small() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn primes_are_large_and_distinct() {
        let ps: Vec<u64> = Primes::new().take(5).collect();
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert!(ps.iter().all(|&p| p > (1 << 61) && is_prime(p)));
    }

    #[test]
    fn montgomery_roundtrip_and_inverse() {
        let p = Primes::new().next().unwrap();
        let f = Montgomery::new(p);
        for x in [1u64, 2, 12345, p - 1] {
            let xm = f.encode(x);
            assert_eq!(f.decode(xm), x);
            assert_eq!(f.decode(f.mul(xm, f.inv(xm))), 1);
        }
        assert_eq!(f.decode(f.reduce(&BigInt::from(-1))), p - 1);
        let big = BigInt::from(p) * BigInt::from(p) + 7;
        assert_eq!(f.decode(f.reduce(&big)), 7);
    }

    #[test]
    fn elimination_core() {
        let p = 1_000_000_007;
        assert_eq!(rank_mod_p_small(&identity(4), p), 4);
        assert_eq!(rank_mod_p_small(&[vec![1, 2, 3], vec![2, 4, 6]], p), 1);
        assert_eq!(rank_mod_p_small(&[vec![0, 0], vec![0, 0]], p), 0);
        // singular only modulo 7
        assert_eq!(rank_mod_p_small(&[vec![1, 2], vec![3, 13]], 7), 1);
        assert_eq!(rank_mod_p_small(&[vec![1, 2], vec![3, 13]], p), 2);
    }
}
