use num_integer::Integer;

use super::DimError;
use crate::arith::Rational;

/// Which piece of the explicit formula applies at degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `d <= t r / (s (t-1)) + r`: the dimension equals `L(Δ')`.
    DeltaPrime,
    /// Between the cuts: `L(Δ) + f`.
    Middle,
    /// `d > (r+1)/s + (r+1)/t + r - 1`: the dimension equals `L(Δ)`.
    Stable,
}

/// `t r / (s (t-1)) + r`, the supersmoothness threshold.
pub fn lower_cut(s: u32, t: u32, r: u32) -> Rational {
    let (s, t, r) = (s as i64, t as i64, r as i64);
    Rational::new((t * r + r * s * (t - 1)).into(), (s * (t - 1)).into())
}

/// `(r+1)/s + (r+1)/t + r - 1`, beyond which the lower bound is exact.
pub fn upper_cut(s: u32, t: u32, r: u32) -> Rational {
    let (s, t, r) = (s as i64, t as i64, r as i64);
    Rational::new(((r + 1) * t + (r + 1) * s + (r - 1) * s * t).into(), (s * t).into())
}

pub fn explicit_branch(s: u32, t: u32, d: u32, r: u32) -> Branch {
    let (s, t, d, r) = (s as i64, t as i64, d as i64, r as i64);
    if d * s * (t - 1) <= t * r + r * s * (t - 1) {
        Branch::DeltaPrime
    } else if d * s * t <= (r + 1) * t + (r + 1) * s + (r - 1) * s * t {
        Branch::Middle
    } else {
        Branch::Stable
    }
}

/// The correction on the middle branch:
///
/// `sum_{i = i0}^{d-r-1} ( ⌊(i-d)(s-1)/s + r⌋ - ⌈(i + d(t-1))/t - r⌉ + 1 )`
///
/// with `i0 = ⌈(2st(d-r) - (s+t)d) / ((s-1)(t-1) - 1)⌉`, each summand
/// clamped at zero.
pub fn f_explicit(s: u32, t: u32, d: u32, r: u32) -> Result<u64, DimError> {
    if t < 3 || explicit_branch(s, t, d, r) != Branch::Middle {
        return Err(DimError::OutOfBranch);
    }
    let (s, t, d, r) = (s as i64, t as i64, d as i64, r as i64);
    let lo = Integer::div_ceil(&(2 * s * t * (d - r) - (s + t) * d), &((s - 1) * (t - 1) - 1));
    let mut total = 0u64;
    for i in lo..=d - r - 1 {
        let upper = Integer::div_floor(&((i - d) * (s - 1) + r * s), &s);
        let lower = Integer::div_ceil(&(i + d * (t - 1) - r * t), &t);
        total += (upper - lower + 1).max(0) as u64;
    }
    Ok(total)
}
