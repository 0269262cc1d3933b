//! Monomial descriptions of power ideals and of the homology module for a
//! single totally interior edge.
//!
//! A power ideal in two variables `x, y` is generated by the powers
//! `(b_i x + c_i y)^{a_i + 1}` of pairwise independent linear forms. Its
//! Hilbert function and its lex initial ideal depend only on the sorted
//! multiplicity sequence `a`, which is what this module works with.
//! Everything here is exact integer counting over small explicit ranges.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::binom;

/// Sorted multiplicities `a_1 <= ... <= a_s` of a power ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicitySeq {
    a: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealError {
    EmptySequence,
    /// `2 <= s <= t <= r + 1` fails.
    OutsideNontrivialRegime { s: u32, t: u32, r: u32 },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptySequence => write!(f, "multiplicity sequence is empty"),
            Self::OutsideNontrivialRegime { s, t, r } => {
                write!(f, "(s, t, r) = ({s}, {t}, {r}) violates 2 <= s <= t <= r+1")
            }
        }
    }
}

impl core::error::Error for IdealError {}

impl MultiplicitySeq {
    /// Sorts the input; fails only when it is empty.
    pub fn new(mut a: Vec<u32>) -> Result<Self, IdealError> {
        if a.is_empty() {
            return Err(IdealError::EmptySequence);
        }
        a.sort_unstable();
        Ok(Self { a })
    }

    /// `s` copies of `m`.
    pub fn constant(m: u32, s: usize) -> Self {
        Self::new(alloc::vec![m; s.max(1)]).expect("nonempty")
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Degree-`d` dimension of the power ideal: `min(d+1, sum (d - a_i)_+)`.
pub fn hilbert_power_ideal(a: &MultiplicitySeq, d: u32) -> u64 {
    let sum: u64 = a.a.iter().map(|&ai| d.saturating_sub(ai) as u64).sum();
    sum.min(d as u64 + 1)
}

/// Whether `x^A y^B` lies in the lex initial ideal of the power ideal:
/// some prefix sum satisfies `a_1 + ... + a_j < jA + (j-1)B`.
pub fn in_membership(a: &MultiplicitySeq, big_a: u32, big_b: u32) -> bool {
    let (big_a, big_b) = (big_a as u64, big_b as u64);
    let mut prefix = 0u64;
    for (j, &ai) in a.a.iter().enumerate() {
        let j = j as u64 + 1;
        prefix += ai as u64;
        if prefix < j * big_a + (j - 1) * big_b {
            return true;
        }
    }
    false
}

/// Degree-`d` dimension of the colon ideal `J : y^e`.
pub fn hilbert_colon(a: &MultiplicitySeq, e: u32, d: u32) -> u64 {
    hilbert_power_ideal(a, d + e).saturating_sub(e as u64)
}

/// Membership of `x^A y^B` in `In(J : y^e) = In(J) : y^e`.
pub fn colon_membership(a: &MultiplicitySeq, e: u32, big_a: u32, big_b: u32) -> bool {
    let (big_a, big_b, e) = (big_a as i64, big_b as i64, e as i64);
    let mut prefix = 0i64;
    for (j, &ai) in a.a.iter().enumerate() {
        let j = j as i64 + 1;
        prefix += ai as i64;
        if prefix - (j - 1) * e < j * big_a + (j - 1) * big_b {
            return true;
        }
    }
    false
}

/// Slope counts `s <= t` at the endpoints of the totally interior edge,
/// together with the smoothness order, in the nontrivial regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TiePair {
    s: u32,
    t: u32,
    r: u32,
}

impl TiePair {
    pub fn new(s: u32, t: u32, r: u32) -> Result<Self, IdealError> {
        if 2 <= s && s <= t && t <= r + 1 {
            Ok(Self { s, t, r })
        } else {
            Err(IdealError::OutsideNontrivialRegime { s, t, r })
        }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Multiplicities of `J_1`, the ideal of the `s` lines through `v1`.
    pub fn first_sequence(&self) -> MultiplicitySeq {
        MultiplicitySeq::constant(self.r, self.s as usize)
    }

    pub fn second_sequence(&self) -> MultiplicitySeq {
        MultiplicitySeq::constant(self.r, self.t as usize)
    }

    /// `x^A z^C` lies in `In(J_1 : z^{r+1})`.
    pub fn in_first_colon(&self, big_a: u32, big_c: u32) -> bool {
        colon_membership(&self.first_sequence(), self.r + 1, big_a, big_c)
    }

    /// `y^B z^C` lies in `In(J_2 : z^{r+1})`.
    pub fn in_second_colon(&self, big_b: u32, big_c: u32) -> bool {
        colon_membership(&self.second_sequence(), self.r + 1, big_b, big_c)
    }

    /// `x^A y^B z^C` survives in the quotient by both colon ideals.
    pub fn in_quotient_basis(&self, big_a: u32, big_b: u32, big_c: u32) -> bool {
        let (s, t, r) = (self.s as i64, self.t as i64, self.r as i64);
        let (a, b, c) = (big_a as i64, big_b as i64, big_c as i64);
        s * a + (s - 1) * c <= r + 1 - s && t * b + (t - 1) * c <= r + 1 - t
    }

    /// `r+1 ≡ s-1 (mod s)` and `r+1 ≡ t-1 (mod t)`.
    pub fn congruence_case(&self) -> bool {
        (self.r + 1) % self.s == self.s - 1 && (self.r + 1) % self.t == self.t - 1
    }
}

/// Triples `(A, B, C)` with `A + B + C = n` in the quotient basis.
pub fn quotient_basis(tp: TiePair, n: u32) -> Vec<(u32, u32, u32)> {
    let max_a = (tp.r + 1 - tp.s) / tp.s;
    let max_b = (tp.r + 1 - tp.t) / tp.t;
    let mut out = Vec::new();
    for a in 0..=max_a.min(n) {
        for b in 0..=max_b.min(n - a) {
            let c = n - a - b;
            if tp.in_quotient_basis(a, b, c) {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Dimension of the homology module in degree `d`: lattice points of the
/// quotient-basis polytope on the slice `A + B + C = d - r - 1`.
pub fn homology_dim(tp: TiePair, d: u32) -> u64 {
    match d.checked_sub(tp.r + 1) {
        Some(n) => quotient_basis(tp, n).len() as u64,
        None => 0,
    }
}

/// The same count, through the planar polygon obtained by eliminating `C`.
pub fn homology_dim_polygon(tp: TiePair, d: u32) -> u64 {
    let (s, t, r, d) = (tp.s as i64, tp.t as i64, tp.r as i64, d as i64);
    let n = d - r - 1;
    let mut count = 0;
    for a in 0..=n.max(-1) {
        for b in 0..=(n - a) {
            if a - b * (s - 1) <= s * r - d * (s - 1) && b - a * (t - 1) <= t * r - d * (t - 1) {
                count += 1;
            }
        }
    }
    count
}

/// Largest degree with nonzero homology.
pub fn homology_regularity(tp: TiePair) -> u32 {
    let base = (tp.r + 1) / tp.s + (tp.r + 1) / tp.t + tp.r;
    if tp.congruence_case() {
        base
    } else {
        base - 1
    }
}

/// Lower and upper bounds on the regularity:
/// `⌊(r+1)/s⌋ + ⌊(r+1)/t⌋ + r - 1` and `⌊(r+1)/s + (r+1)/t⌋ + r - 1`.
pub fn regularity_bounds(tp: TiePair) -> (u32, u32) {
    let (s, t, r) = (tp.s, tp.t, tp.r);
    let lo = (r + 1) / s + (r + 1) / t + r - 1;
    let hi = ((r + 1) * (s + t)) / (s * t) + r - 1;
    (lo, hi)
}

/// Quotient-basis points on the slice `A + B + C = ⌊(r+1)/s⌋ + ⌊(r+1)/t⌋ - 1`,
/// the only slice that decides between the two regularity values.
pub fn critical_slice(tp: TiePair) -> Vec<(u32, u32, u32)> {
    quotient_basis(tp, (tp.r + 1) / tp.s + (tp.r + 1) / tp.t - 1)
}

/// Least degree of a monomial in both colon initial ideals.
pub fn intersection_initdeg(tp: TiePair) -> u32 {
    let (s, t, r) = (tp.s as i64, tp.t as i64, tp.r as i64);
    let bound = tp.r + 2;
    let mut best = u32::MAX;
    for c in 0..=bound {
        for a in 0..=bound {
            for b in 0..=bound {
                let (ai, bi, ci) = (a as i64, b as i64, c as i64);
                if s * ai + (s - 1) * ci > r + 1 - s && t * bi + (t - 1) * ci > r + 1 - t {
                    best = best.min(a + b + c);
                }
            }
        }
    }
    best
}

/// Degree-`n` dimension of `In(J_1:z^{r+1}) + In(J_2:z^{r+1})`, by
/// inclusion-exclusion over the monomials of degree `n` in `x, y, z`.
pub fn sum_of_initials_dim(tp: TiePair, n: u32) -> u64 {
    let (mut first, mut second, mut both) = (0u64, 0u64, 0u64);
    for_each_monomial(n, |a, b, c| {
        let (u, v) = (tp.in_first_colon(a, c), tp.in_second_colon(b, c));
        first += u as u64;
        second += v as u64;
        both += (u && v) as u64;
    });
    first + second - both
}

/// Degree-`n` dimension of `In(J_1:z^{r+1}) ∩ In(J_2:z^{r+1})`.
pub fn intersection_of_initials_dim(tp: TiePair, n: u32) -> u64 {
    let mut both = 0u64;
    for_each_monomial(n, |a, b, c| {
        both += (tp.in_first_colon(a, c) && tp.in_second_colon(b, c)) as u64;
    });
    both
}

/// Degree-`n` dimension of a single colon initial ideal in three variables.
pub fn first_colon_dim(tp: TiePair, n: u32) -> u64 {
    let mut count = 0u64;
    for_each_monomial(n, |a, _, c| count += tp.in_first_colon(a, c) as u64);
    count
}

pub fn second_colon_dim(tp: TiePair, n: u32) -> u64 {
    let mut count = 0u64;
    for_each_monomial(n, |_, b, c| count += tp.in_second_colon(b, c) as u64);
    count
}

fn for_each_monomial(n: u32, mut f: impl FnMut(u32, u32, u32)) {
    for a in 0..=n {
        for b in 0..=n - a {
            f(a, b, n - a - b);
        }
    }
}

/// Number of monomials of degree `n` in three variables.
pub fn monomials_3(n: u32) -> u64 {
    binom(n as i64 + 2, 2)
}

#[cfg(test)]
mod tests;
