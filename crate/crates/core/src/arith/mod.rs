//! Exact arithmetic: arbitrary-precision rationals, the zero-extended
//! binomial coefficient, and exact rank / kernel dimension of dense
//! rational matrices.

mod certify;
mod matrix;
mod modular;

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use self::certify::{kernel_basis, rank_multimodular};
pub use self::matrix::{rank_bareiss, rank_of_integer_rows, RatMatrix};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Error returned when a coordinate or rational literal cannot be parsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl ParseRationalError {
    fn new(input: &str, reason: &'static str) -> Self {
        Self { input: input.into(), reason }
    }
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl core::error::Error for ParseRationalError {}

/// Parses an integer (`"-3"`) or a fraction (`"7/4"`, `"-9/4"`).
///
/// Decimal and exponent notation are rejected: every coordinate must be an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::new(s, "empty"));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(ParseRationalError::new(s, "floating-point notation is not accepted"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| ParseRationalError::new(s, "bad numerator"))?;
    let den = BigInt::from_str(den).map_err(|_| ParseRationalError::new(s, "bad denominator"))?;
    if den.is_zero() {
        return Err(ParseRationalError::new(s, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"n"` for integers and `"n/d"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Binomial coefficient with the convention `binom(A, B) = 0` unless
/// `0 <= B <= A`. Negative arguments are allowed.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step.
        acc = acc * (a - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Least common multiple of the denominators, times each entry: the
/// primitive integer vector proportional to `row`. Zero rows stay zero.
pub(crate) fn integer_row(row: &[Rational]) -> alloc::vec::Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for q in row {
        if !q.is_zero() {
            lcm = lcm.lcm(q.denom());
        }
    }
    let mut out: alloc::vec::Vec<BigInt> = row
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &out {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut out {
            *x /= &g;
        }
    }
    out
}

pub(crate) fn abs_bits(x: &BigInt) -> u64 {
    x.abs().bits()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn binom_convention() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(-3, 2), 0);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn binom_pascal() {
        for a in -5..=20 {
            for b in -5..=20 {
                // The zero-extended convention breaks Pascal only at (0, 0).
                if a == 0 && b == 0 {
                    assert_eq!(binom(0, 0), 1);
                    assert_eq!(binom(-1, -1) + binom(-1, 0), 0);
                    continue;
                }
                assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b), "A={a} B={b}");
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let q = parse_rational("-9/4").unwrap();
        assert_eq!(format_rational(&q), "-9/4");
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational(" 7 ").unwrap()), "7");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/2").is_err());
    }

    #[test]
    fn integer_row_is_primitive() {
        let row = vec![
            parse_rational("1/2").unwrap(),
            parse_rational("0").unwrap(),
            parse_rational("-3/4").unwrap(),
        ];
        let ints = integer_row(&row);
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(0), BigInt::from(-3)]);
    }
}
