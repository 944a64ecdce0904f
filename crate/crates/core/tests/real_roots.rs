mod common;

use galprime::sturm::{complex_pair_count, count_real_roots, SturmSequence};
use galprime::{Error, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn squarefree(deg: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<i64>> {
    deg.prop_flat_map(|d| {
        (prop::collection::vec(-20i64..=20, d), prop_oneof![-5i64..=-1, 1i64..=5]).prop_map(|(mut c, lc)| {
            c.push(lc);
            c
        })
    })
    .prop_filter("squarefree", |c| IntPoly::from_i64s(c).is_squarefree())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn sturm_matches_bisection(c in squarefree(1..=9)) {
        prop_assert_eq!(count_real_roots(&IntPoly::from_i64s(&c)).unwrap(), common::bisection_root_count(&c));
    }

    #[test]
    fn odd_degree_parity(c in squarefree(1..=9)) {
        let p = c.len() - 1;
        prop_assume!(p % 2 == 1);
        let f = IntPoly::from_i64s(&c);
        let r = count_real_roots(&f).unwrap();
        let k = complex_pair_count(&f).unwrap();
        prop_assert!(r <= p && 2 * k < p);
        prop_assert_eq!(r % 2, p % 2);
        prop_assert_eq!(r + 2 * k, p);
    }

    #[test]
    fn partition_counts_add_up(c in squarefree(1..=8), cuts in prop::collection::vec(-40i64..=40, 1..6)) {
        let f = IntPoly::from_i64s(&c);
        let s = SturmSequence::new(&f).unwrap();
        let mut pts: Vec<i64> = cuts;
        pts.push(-1 << 20);
        pts.push(1 << 20);
        pts.sort_unstable();
        pts.dedup();
        let q = |x: i64| BigRational::from_integer(BigInt::from(x)) / BigRational::from_integer(BigInt::from(4));
        let total: usize = pts.windows(2).map(|w| s.count_in(&q(w[0]), &q(w[1]))).sum();
        prop_assert_eq!(total, s.count_real());
    }
}

#[test]
fn frozen_counts() {
    // counts fixed by the bisection oracle
    for (c, r) in [
        (&[2, -4, 0, 0, 0, 1][..], 3),
        (&[-2, 0, 0, 0, 0, 1], 1),
        (&[1, 3, -3, -4, 1, 1], 5),
        (&[1, 1, 0, 0, 0, 0, 0, 1], 1),
        (&[1, 1, 1], 0),
    ] {
        assert_eq!(common::bisection_root_count(c), r);
        assert_eq!(count_real_roots(&IntPoly::from_i64s(c)).unwrap(), r);
    }
}

#[test]
fn repeated_roots_rejected() {
    let f = IntPoly::from_i64s(&[1, -2, 1]);
    assert_eq!(count_real_roots(&f), Err(Error::NotSquarefree));
}
