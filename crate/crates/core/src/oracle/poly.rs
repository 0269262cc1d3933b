use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binom, integer_row, Rational};

use super::OracleError;

/// A homogeneous linear form in `N` variables with rational coefficients.
///
/// With `N = 3` the same coefficients `[a, b, c]` also describe the affine
/// planar form `a x + b y + c`, which is its dehomogenization at `z = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm<const N: usize> {
    coeffs: [Rational; N],
}

pub type LinearForm2 = LinearForm<2>;
pub type LinearForm3 = LinearForm<3>;

impl<const N: usize> LinearForm<N> {
    pub fn new(coeffs: [Rational; N]) -> Result<Self, OracleError> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(OracleError::ZeroForm);
        }
        Ok(Self { coeffs })
    }

    /// Panics on the zero form.
    pub fn from_ints(coeffs: [i64; N]) -> Self {
        Self::new(coeffs.map(|c| Rational::from_integer(BigInt::from(c)))).expect("nonzero form")
    }

    pub fn coeffs(&self) -> &[Rational; N] {
        &self.coeffs
    }

    /// A primitive integer multiple; generates the same ideals.
    pub(super) fn integer_coeffs(&self) -> Vec<BigInt> {
        integer_row(&self.coeffs)
    }
}

/// Column order for polynomials of degree at most `d` in `x, y`: graded by
/// total degree, then lex with `x` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyBasisIndex {
    d: u32,
}

impl PolyBasisIndex {
    pub fn new(d: u32) -> Self {
        Self { d }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        binom(self.d as i64 + 2, 2) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Column of `x^i y^j`; `None` when `i + j > d`.
    pub fn index(&self, i: u32, j: u32) -> Option<usize> {
        (i + j <= self.d).then(|| graded_index(i, j))
    }

    /// Exponents `(i, j)` at column `k`.
    pub fn monomial(&self, k: usize) -> Option<(u32, u32)> {
        (k < self.len()).then(|| {
            // Largest total degree n with n(n+1)/2 <= k.
            let mut n = 0usize;
            while (n + 1) * (n + 2) / 2 <= k {
                n += 1;
            }
            let j = k - n * (n + 1) / 2;
            ((n - j) as u32, j as u32)
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> {
        (0..=self.d).flat_map(|n| (0..=n).map(move |j| (n - j, j)))
    }
}

fn graded_index(i: u32, j: u32) -> usize {
    let n = (i + j) as usize;
    n * (n + 1) / 2 + j as usize
}

/// Homogeneous polynomials in two or three variables, stored densely per
/// degree. A degree-`n` monomial `x^a y^b z^c` sits at the column that
/// [`PolyBasisIndex`] gives `x^a y^b`, so the three-variable order is the
/// affine order after setting `z = 1`. In two variables `x^a y^b` sits at `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) struct Ring {
    nvars: usize,
}

pub(super) type Monomial = [u32; 3];

impl Ring {
    pub(super) fn new(nvars: usize) -> Self {
        assert!(nvars == 2 || nvars == 3, "two or three variables");
        Self { nvars }
    }

    pub(super) fn dim(&self, n: u32) -> usize {
        if self.nvars == 2 {
            n as usize + 1
        } else {
            binom(n as i64 + 2, 2) as usize
        }
    }

    pub(super) fn index(&self, m: Monomial) -> usize {
        if self.nvars == 2 {
            m[1] as usize
        } else {
            graded_index(m[0], m[1])
        }
    }

    /// Degree-`n` monomials in column order.
    pub(super) fn monomials(&self, n: u32) -> Vec<Monomial> {
        if self.nvars == 2 {
            (0..=n).map(|b| [n - b, b, 0]).collect()
        } else {
            (0..=n).flat_map(|k| (0..=k).map(move |b| [k - b, b, n - k])).collect()
        }
    }

    /// Coefficients of `form^k`.
    pub(super) fn power(&self, form: &[BigInt], k: u32) -> Vec<BigInt> {
        debug_assert_eq!(form.len(), self.nvars);
        let mut poly = vec![BigInt::from(1)];
        for n in 0..k {
            let mut next = vec![BigInt::zero(); self.dim(n + 1)];
            for (m, c) in self.monomials(n).into_iter().zip(&poly) {
                if c.is_zero() {
                    continue;
                }
                for (v, a) in form.iter().enumerate() {
                    if !a.is_zero() {
                        let mut up = m;
                        up[v] += 1;
                        next[self.index(up)] += c * a;
                    }
                }
            }
            poly = next;
        }
        poly
    }

    /// `poly * m` as a row in degree `pdeg + deg m`.
    pub(super) fn times_monomial(&self, poly: &[BigInt], pdeg: u32, m: Monomial) -> Vec<BigInt> {
        let mdeg = m[0] + m[1] + m[2];
        let mut row = vec![BigInt::zero(); self.dim(pdeg + mdeg)];
        for (p, c) in self.monomials(pdeg).into_iter().zip(poly) {
            if !c.is_zero() {
                row[self.index([p[0] + m[0], p[1] + m[1], p[2] + m[2]])] = c.clone();
            }
        }
        row
    }

    /// Spanning set of the degree-`n` piece of the ideal generated by
    /// `(form, exponent)` pairs.
    pub(super) fn ideal_rows(&self, generators: &[(Vec<BigInt>, u32)], n: u32) -> Vec<Vec<BigInt>> {
        let mut rows = Vec::new();
        for (form, e) in generators {
            let Some(rest) = n.checked_sub(*e) else { continue };
            let g = self.power(form, *e);
            for m in self.monomials(rest) {
                rows.push(self.times_monomial(&g, *e, m));
            }
        }
        rows
    }

    /// `g * m` for every degree-`n` monomial `m`, where `g` has degree `gdeg`.
    pub(super) fn multiples(&self, g: &[BigInt], gdeg: u32, n: u32) -> Vec<Vec<BigInt>> {
        self.monomials(n).into_iter().map(|m| self.times_monomial(g, gdeg, m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_index_round_trip() {
        let b = PolyBasisIndex::new(4);
        assert_eq!(b.len(), 15);
        let order: Vec<_> = b.iter().collect();
        assert_eq!(&order[..4], &[(0, 0), (1, 0), (0, 1), (2, 0)]);
        for (k, &(i, j)) in order.iter().enumerate() {
            assert_eq!(b.index(i, j), Some(k));
            assert_eq!(b.monomial(k), Some((i, j)));
        }
        assert_eq!(b.index(3, 2), None);
        assert_eq!(b.monomial(15), None);
    }

    #[test]
    fn ring_columns_are_a_bijection() {
        for nvars in [2, 3] {
            let ring = Ring::new(nvars);
            for n in 0..7 {
                let ms = ring.monomials(n);
                assert_eq!(ms.len(), ring.dim(n));
                for (k, m) in ms.iter().enumerate() {
                    assert_eq!(ring.index(*m), k);
                }
            }
        }
    }

    #[test]
    fn binomial_expansion() {
        let ring = Ring::new(2);
        let p = ring.power(&[BigInt::from(1), BigInt::from(2)], 3);
        // (x + 2y)^3 = x^3 + 6x^2y + 12xy^2 + 8y^3
        let want: Vec<BigInt> = [1, 6, 12, 8].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(p, want);
        let ring3 = Ring::new(3);
        let q = ring3.power(&[BigInt::from(1), BigInt::from(1), BigInt::from(1)], 2);
        // Multinomial coefficients of (x+y+z)^2 sum to 9.
        assert_eq!(q.iter().sum::<BigInt>(), BigInt::from(9));
        assert_eq!(q[ring3.index([1, 1, 0])], BigInt::from(2));
        assert_eq!(q[ring3.index([0, 0, 2])], BigInt::from(1));
    }
}
