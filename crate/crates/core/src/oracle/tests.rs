use alloc::vec::Vec;

use num_bigint::BigInt;

use super::*;
use crate::arith::{binom, Rational};
use crate::power_ideal::{hilbert_colon, hilbert_power_ideal, homology_dim, MultiplicitySeq, TiePair};
use crate::triangulation::samples::{figure2, tohaneanu};
use crate::triangulation::AffineMap;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| q(n)).collect()
}

#[test]
fn global_polynomials_below_smoothness() {
    for tri in [figure2(), tohaneanu()] {
        for r in 0..4 {
            for d in 0..=r {
                assert_eq!(dim_spline_oracle(&tri, d, r), Ok(binom(d as i64 + 2, 2)));
            }
        }
    }
}

#[test]
fn anchor_values() {
    assert_eq!(dim_spline_oracle(&tohaneanu(), 2, 1), Ok(10));
    assert_eq!(dim_spline_oracle(&figure2(), 12, 8), Ok(135));
}

#[test]
fn continuous_splines_count_vertices() {
    // C^0 linear splines: one value per vertex.
    let tri = figure2();
    assert_eq!(dim_spline_oracle(&tri, 1, 0), Ok(tri.vertices().len() as u64));
}

#[test]
fn affine_invariance() {
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let map = AffineMap {
        m: [[q(2), q(1)], [half.clone(), q(-3)]],
        b: [q(5), half],
    };
    for tri in [figure2(), tohaneanu()] {
        let moved = tri.affine_transform(&map).unwrap();
        for (r, d) in [(1, 3), (2, 5), (3, 7)] {
            assert_eq!(dim_spline_oracle(&tri, d, r), dim_spline_oracle(&moved, d, r));
        }
    }
}

#[test]
fn guardrail() {
    let tri = figure2();
    let err = dim_spline_oracle(&tri, 40, 1).unwrap_err();
    assert!(matches!(err, OracleError::TooLarge { columns } if columns > MAX_COLUMNS));
    assert_eq!(err.name(), "TooLarge");
}

fn forms2(slopes: &[i64], e: u32) -> Vec<(LinearForm2, u32)> {
    slopes.iter().map(|&b| (LinearForm2::from_ints([1, b]), e)).collect()
}

#[test]
fn power_ideal_hilbert() {
    assert_eq!(hilbert_ideal_oracle(&forms2(&[1, 2, 3], 7), 7), 3);
    assert_eq!(hilbert_ideal_oracle(&forms2(&[4], 5), 5), 1);
    for r in 0..6u32 {
        for s in 1..5usize {
            let gens = forms2(&[1, -2, 3, 5, -7][..s], r + 1);
            let a = MultiplicitySeq::constant(r, s);
            for d in 0..16 {
                assert_eq!(hilbert_ideal_oracle(&gens, d), hilbert_power_ideal(&a, d), "r={r} s={s} d={d}");
            }
        }
    }
}

#[test]
fn colon_hilbert() {
    let gens = forms2(&[1, 2, 3], 7);
    let z = LinearForm2::from_ints([0, 1]);
    let a = MultiplicitySeq::constant(6, 3);
    for d in 0..=10 {
        assert_eq!(hilbert_colon_oracle(&gens, &z, 7, d), hilbert_colon(&a, 7, d), "d={d}");
        assert_eq!(hilbert_colon_oracle(&gens, &z, 0, d), hilbert_ideal_oracle(&gens, d));
    }
}

fn tie_generators(slopes: &[i64], second: bool, e: u32) -> Vec<(LinearForm3, u32)> {
    slopes
        .iter()
        .map(|&b| {
            let f = if second { [0, 1, b] } else { [1, 0, b] };
            (LinearForm3::from_ints(f), e)
        })
        .collect()
}

#[test]
fn colon_sum_example() {
    // (s,t,r) = (3,4,6): the quotient is spanned by 1, x, z.
    let j1 = tie_generators(&[1, 2, 3], false, 7);
    let j2 = tie_generators(&[1, 2, 3, 4], true, 7);
    let z = LinearForm3::from_ints([0, 0, 1]);
    let quotient: Vec<u64> =
        (0..4).map(|n| binom(n as i64 + 2, 2) - colon_sum_oracle(&j1, &j2, &z, 7, n)).collect();
    assert_eq!(quotient, [1, 2, 0, 0]);
}

#[test]
fn structured_homology_matches_generic_sum() {
    let z = LinearForm3::from_ints([0, 0, 1]);
    for (s, t, r) in [(2, 2, 1), (2, 3, 3), (3, 4, 6), (2, 2, 3)] {
        let b: Vec<i64> = (1..=s as i64).collect();
        let c: Vec<i64> = (1..=t as i64).map(|x| -x).collect();
        let j1 = tie_generators(&b, false, r + 1);
        let j2 = tie_generators(&c, true, r + 1);
        let dims = homology_dims_oracle(s, t, r, &qs(&b), &qs(&c), 2 * r + 3).unwrap();
        for d in r + 1..=2 * r + 3 {
            let n = d - r - 1;
            let generic = binom(n as i64 + 2, 2) - colon_sum_oracle(&j1, &j2, &z, r + 1, n);
            assert_eq!(dims[d as usize], generic, "(s,t,r,d)=({s},{t},{r},{d})");
        }
    }
}

#[test]
fn homology_anchor_and_sweep() {
    let b = qs(&[1, 2, 3]);
    let c = qs(&[1, 2, 3, 4]);
    assert_eq!(homology_dim_oracle(3, 4, 8, &b, &c, 12), Ok(1));
    assert_eq!(homology_dim_oracle(3, 4, 8, &b, &c, 8), Ok(0));
    for r in 1..=5u32 {
        for s in 2..=r + 1 {
            for t in s..=r + 1 {
                let tp = TiePair::new(s, t, r).unwrap();
                let b: Vec<i64> = (1..=s as i64).collect();
                let c: Vec<i64> = (1..=t as i64).collect();
                let dims = homology_dims_oracle(s, t, r, &qs(&b), &qs(&c), 3 * r).unwrap();
                for d in 0..=3 * r {
                    assert_eq!(dims[d as usize], homology_dim(tp, d), "{tp:?} d={d}");
                }
            }
        }
    }
}

#[test]
fn degenerate_slopes_rejected() {
    let ok = qs(&[1, 2]);
    assert_eq!(homology_dim_oracle(2, 2, 3, &qs(&[1, 1]), &ok, 5), Err(OracleError::DegenerateSlopes));
    assert_eq!(homology_dim_oracle(2, 2, 3, &qs(&[0, 1]), &ok, 5), Err(OracleError::DegenerateSlopes));
    assert_eq!(homology_dim_oracle(2, 2, 3, &qs(&[1, 2, 3]), &ok, 5), Err(OracleError::DegenerateSlopes));
    assert!(LinearForm3::new([q(0), q(0), q(0)]).is_err());
}
