use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;

fn seq(v: &[u32]) -> MultiplicitySeq {
    MultiplicitySeq::new(v.to_vec()).unwrap()
}

fn pairs(max_r: u32) -> impl Iterator<Item = TiePair> {
    (0..=max_r).flat_map(|r| {
        (2..=r + 1).flat_map(move |s| (s..=r + 1).map(move |t| TiePair::new(s, t, r).unwrap()))
    })
}

#[test]
fn hilbert_examples() {
    assert_eq!(hilbert_power_ideal(&MultiplicitySeq::constant(6, 3), 6), 0);
    assert_eq!(hilbert_power_ideal(&seq(&[6, 6, 6]), 7), 3);
    assert_eq!(hilbert_power_ideal(&seq(&[2, 3]), 4), 3);
    assert_eq!(hilbert_power_ideal(&seq(&[0]), 5), 5);
    assert_eq!(MultiplicitySeq::new(vec![]), Err(IdealError::EmptySequence));
    assert_eq!(seq(&[3, 1, 2]).as_slice(), &[1, 2, 3]);
}

#[test]
fn membership_examples() {
    assert!(in_membership(&seq(&[2, 3]), 3, 0));
    assert!(!in_membership(&seq(&[2, 3]), 0, 0));
    for r in 0..8 {
        for s in 1..6u32 {
            let a = MultiplicitySeq::constant(r, s as usize);
            for x in 0..12 {
                for y in 0..12 {
                    assert_eq!(in_membership(&a, x, y), s * r < s * x + (s - 1) * y);
                }
            }
        }
    }
}

#[test]
fn colon_examples() {
    let a = seq(&[6, 6, 6]);
    assert_eq!(hilbert_colon(&a, 0, 9), hilbert_power_ideal(&a, 9));
    assert_eq!(hilbert_colon(&a, 7, 0), 0);
    assert_eq!(hilbert_colon(&a, 7, 2), 2);
    for x in 0..10 {
        for c in 0..10 {
            // r = 6, s = 3: outside iff 3A + 2C <= r + 1 - s = 4.
            assert_eq!(!colon_membership(&a, 7, x, c), 3 * x + 2 * c <= 4);
            let b = seq(&[5, 5, 5, 5]);
            assert_eq!(!colon_membership(&b, 6, x, c), 4 * x + 3 * c <= 2);
        }
    }
}

#[test]
fn homology_examples() {
    let tp = TiePair::new(3, 4, 8).unwrap();
    assert_eq!(homology_dim(tp, 12), 1);
    assert_eq!(quotient_basis(tp, 3), vec![(2, 1, 0)]);
    assert_eq!(homology_dim(TiePair::new(2, 3, 5).unwrap(), 9), 1);
    for tp in pairs(6) {
        for d in 0..=tp.r() {
            assert_eq!(homology_dim(tp, d), 0);
        }
    }
    assert!(TiePair::new(1, 3, 5).is_err());
    assert!(TiePair::new(3, 2, 5).is_err());
    assert!(TiePair::new(2, 7, 5).is_err());
}

#[test]
fn regularity_examples() {
    assert_eq!(homology_regularity(TiePair::new(3, 4, 6).unwrap()), 8);
    assert_eq!(homology_regularity(TiePair::new(3, 4, 10).unwrap()), 15);
    // r+1 = 6 is even, so the congruence 6 ≡ 1 (mod 2) fails.
    let tp = TiePair::new(2, 2, 5).unwrap();
    assert!(!tp.congruence_case());
    assert_eq!(homology_regularity(tp), 10);
    assert_eq!(regularity_bounds(TiePair::new(3, 4, 6).unwrap()), (8, 9));
    assert_eq!(regularity_bounds(TiePair::new(3, 4, 10).unwrap()), (14, 15));
}

#[test]
fn quotient_generators_in_examples() {
    // (s,t,r) = (3,4,6): the quotient is spanned by 1, x, z.
    let tp = TiePair::new(3, 4, 6).unwrap();
    let basis: Vec<_> = (0..4).flat_map(|n| quotient_basis(tp, n)).collect();
    assert_eq!(basis, vec![(0, 0, 0), (0, 0, 1), (1, 0, 0)]);
    // (3,4,10): x^2 y z is the unique survivor of degree four.
    let tp = TiePair::new(3, 4, 10).unwrap();
    assert_eq!(quotient_basis(tp, 4), vec![(2, 1, 1)]);
    assert!(quotient_basis(tp, 5).is_empty());
}

#[test]
fn regularity_is_last_nonzero_degree() {
    for tp in pairs(14) {
        let reg = homology_regularity(tp);
        assert!(homology_dim(tp, reg) > 0, "{tp:?}");
        for d in reg + 1..=3 * tp.r() + 4 {
            assert_eq!(homology_dim(tp, d), 0, "{tp:?} d={d}");
        }
        let (lo, hi) = regularity_bounds(tp);
        assert!(lo <= reg && reg <= hi.max(lo + 1));
        assert!(reg == lo || (reg == lo + 1 && tp.congruence_case()));
    }
}

#[test]
fn critical_slice_classification() {
    for tp in pairs(16) {
        let pts = critical_slice(tp);
        assert_eq!(!pts.is_empty(), tp.congruence_case(), "{tp:?}");
        if !tp.congruence_case() {
            continue;
        }
        let (fs, ft) = ((tp.r() + 1) / tp.s(), (tp.r() + 1) / tp.t());
        if tp.t() >= 3 {
            assert_eq!(pts, vec![(fs - 1, ft - 1, 1)]);
        } else {
            let mut expect: Vec<_> = (0..tp.r() / 2).map(|k| (k, k, tp.r() - 1 - 2 * k)).collect();
            expect.sort_unstable();
            let mut got = pts.clone();
            got.sort_unstable();
            assert_eq!(got, expect);
        }
    }
}

#[test]
fn polygon_matches_polytope() {
    for tp in pairs(12) {
        for d in 0..=3 * tp.r() + 2 {
            assert_eq!(homology_dim(tp, d), homology_dim_polygon(tp, d), "{tp:?} d={d}");
        }
    }
}

#[test]
fn initdeg_examples() {
    assert_eq!(intersection_initdeg(TiePair::new(2, 2, 1).unwrap()), 1);
    let tp = TiePair::new(3, 4, 8).unwrap();
    let mut brute = u32::MAX;
    for a in 0..=10u32 {
        for b in 0..=10u32 {
            for c in 0..=10u32 {
                if 3 * a + 2 * c > 6 && 4 * b + 3 * c > 5 {
                    brute = brute.min(a + b + c);
                }
            }
        }
    }
    assert_eq!(intersection_initdeg(tp), brute);
}

#[test]
fn initdeg_exceeds_supersmoothness_bound() {
    for tp in pairs(12) {
        let (s, t, r) = (tp.s() as i64, tp.t() as i64, tp.r() as i64);
        // initdeg > t r / (s (t-1)) - 1, cleared of denominators.
        let lhs = (intersection_initdeg(tp) as i64 + 1) * s * (t - 1);
        assert!(lhs > t * r, "{tp:?}");
    }
}

#[test]
fn initial_ideal_descriptions() {
    for tp in pairs(8) {
        let (s, t, r) = (tp.s(), tp.t(), tp.r());
        for a in 0..12 {
            for c in 0..12 {
                assert_eq!(tp.in_first_colon(a, c), r + 1 - s < s * a + (s - 1) * c);
                assert_eq!(tp.in_second_colon(a, c), r + 1 - t < t * a + (t - 1) * c);
            }
        }
        for n in 0..=2 * r + 2 {
            let outside = monomials_3(n) - sum_of_initials_dim(tp, n);
            assert_eq!(outside, quotient_basis(tp, n).len() as u64);
            assert_eq!(
                intersection_of_initials_dim(tp, n),
                first_colon_dim(tp, n) + second_colon_dim(tp, n) - sum_of_initials_dim(tp, n)
            );
        }
    }
}

fn sorted_seq() -> impl Strategy<Value = MultiplicitySeq> {
    proptest::collection::vec(0u32..9, 1..6).prop_map(|v| MultiplicitySeq::new(v).unwrap())
}

proptest! {
    #[test]
    fn lex_segment(a in sorted_seq(), d in 0u32..21) {
        let members: Vec<bool> = (0..=d).map(|x| in_membership(&a, x, d - x)).collect();
        let count = members.iter().filter(|&&m| m).count() as u64;
        prop_assert_eq!(count, hilbert_power_ideal(&a, d));
        // Upward closed in the x exponent along the degree-d antidiagonal.
        for x in 1..=d as usize {
            prop_assert!(!members[x - 1] || members[x]);
        }
    }

    #[test]
    fn colon_is_shifted_membership(a in sorted_seq(), e in 0u32..9, x in 0u32..21, y in 0u32..21) {
        prop_assume!(x + y <= 20);
        prop_assert_eq!(colon_membership(&a, e, x, y), in_membership(&a, x, y + e));
    }

    #[test]
    fn colon_hilbert_counts_colon_members(a in sorted_seq(), e in 0u32..9, d in 0u32..21) {
        let count = (0..=d).filter(|&x| colon_membership(&a, e, x, d - x)).count() as u64;
        prop_assert_eq!(count, hilbert_colon(&a, e, d));
    }
}
