use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::certify::rank_multimodular;
use super::{abs_bits, integer_row, Rational};

/// Above this many entries, [`rank_of_integer_rows`] switches from exact
/// Bareiss elimination to the certified multimodular rank.
const BAREISS_LIMIT: usize = 400;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    /// Zero matrix of the given shape.
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// Builds a matrix from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        Self { rows: n, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| integer_row(&self.entries[i * self.cols..(i + 1) * self.cols]))
            .collect();
        rank_of_integer_rows(&rows, self.cols)
    }

    /// Dimension of the right null space, `cols - rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Exact rank of an integer matrix, choosing the engine by size.
pub fn rank_of_integer_rows(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let nonzero: Vec<Vec<BigInt>> =
        rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if nonzero.len() * cols <= BAREISS_LIMIT {
        rank_bareiss(&nonzero, cols)
    } else {
        rank_multimodular(&nonzero, cols)
    }
}

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor
/// of the input, so the division by the previous pivot is exact.
pub fn rank_bareiss(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let n = m.len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let pivot = (rank..n)
            .filter(|&i| !m[i][c].is_zero())
            .max_by_key(|&i| abs_bits(&m[i][c]));
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &f * &prow[j];
                row[j] = v.div_floor(&prev);
            }
        }
        prev = prow[c].clone();
        rank += 1;
    }
    rank
}

/// `ceil(log2 ||v||)` upper bound, computed without floating point.
fn norm_bits(v: &[BigInt]) -> u64 {
    let sq: BigInt = v.iter().map(|x| x * x).sum();
    sq.bits().div_ceil(2)
}

/// Upper bound on `log2 |M|` over all `k x k` minors `M`, via Hadamard's
/// inequality applied to the rows and to the columns.
pub(super) fn minor_bound_bits(rows: &[Vec<BigInt>], cols: usize, k: usize) -> u64 {
    let top = |mut bits: Vec<u64>| -> u64 {
        bits.sort_unstable_by(|a, b| b.cmp(a));
        bits.iter().take(k).sum()
    };
    let by_rows = top(rows.iter().map(|r| norm_bits(r)).collect());
    let by_cols = top(
        (0..cols)
            .map(|j| {
                let col: Vec<BigInt> = rows.iter().map(|r| r[j].clone()).collect();
                norm_bits(&col)
            })
            .collect(),
    );
    by_rows.min(by_cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn int_rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        let id = RatMatrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(1)]], 2);
        assert_eq!(id.kernel_dim(), 0);
        assert_eq!(RatMatrix::new(2, 3).kernel_dim(), 3);
        let dep = RatMatrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]], 3);
        assert_eq!(dep.rank(), 1);
        assert_eq!(dep.kernel_dim(), 2);
        assert_eq!(RatMatrix::new(0, 4).kernel_dim(), 4);
    }

    #[test]
    fn rational_entries() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let m = RatMatrix::from_rows(vec![vec![half.clone(), q(1)], vec![q(1), q(2)]], 2);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn engines_agree_on_large_entries() {
        let rows = int_rows(&[&[1 << 40, 3, 5], &[7, 1 << 50, 11], &[(1 << 40) + 7, (1 << 50) + 3, 16]]);
        assert_eq!(rank_bareiss(&rows, 3), 2);
        assert_eq!(rank_multimodular(&rows, 3), 2);
    }

    #[test]
    fn large_rank_deficient() {
        // 30x40 matrix of rank 12 built as a product of random-ish factors.
        let a: Vec<Vec<i64>> =
            (0..30).map(|i| (0..12).map(|k| ((i * 7 + k * 13) % 17) as i64 - 8).collect()).collect();
        let b: Vec<Vec<i64>> =
            (0..12).map(|k| (0..40).map(|j| ((k * 5 + j * 11) % 19) as i64 - 9).collect()).collect();
        let prod: Vec<Vec<BigInt>> = a
            .iter()
            .map(|ar| (0..40).map(|j| BigInt::from((0..12).map(|k| ar[k] * b[k][j]).sum::<i64>())).collect())
            .collect();
        let r = rank_bareiss(&prod, 40);
        assert!(r <= 12);
        assert_eq!(rank_multimodular(&prod, 40), r);
        assert_eq!(rank_of_integer_rows(&prod, 40), r);
    }

    fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
        (1usize..7, 1usize..7).prop_flat_map(|(m, n)| {
            (Just(n), proptest::collection::vec(proptest::collection::vec(-3i64..4, n), m))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((n, rows) in small_matrix()) {
            let m = RatMatrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), n);
            prop_assert_eq!(m.rank() + m.kernel_dim(), n);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn engines_agree((n, rows) in small_matrix()) {
            let ints: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(rank_bareiss(&ints, n), rank_multimodular(&ints, n));
        }
    }
}
