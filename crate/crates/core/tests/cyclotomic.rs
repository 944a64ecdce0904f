mod common;

use galprime::classifier::certify_irreducible;
use galprime::cyclotomic::{gaussian_period, minimal_polynomial, period_exponents, CyclotomicElement};
use galprime::numtheory::{is_prime_u64, primitive_root};
use galprime::sturm::count_real_roots;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn element(q: u64) -> impl Strategy<Value = CyclotomicElement> {
    prop::collection::vec(-50i64..=50, (q - 1) as usize)
        .prop_map(move |c| CyclotomicElement::new(q, c.into_iter().map(BigInt::from).collect()))
}

fn triple() -> impl Strategy<Value = (CyclotomicElement, CyclotomicElement, CyclotomicElement)> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_flat_map(|q| (element(q), element(q), element(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &CyclotomicElement::one(a.q()), a.clone());
    }

    #[test]
    fn automorphisms_are_ring_maps((a, b, _c) in triple(), t in 1u64..100) {
        let q = a.q();
        prop_assume!(t % q != 0);
        prop_assert_eq!((&a * &b).galois_apply(t).unwrap(), &a.galois_apply(t).unwrap() * &b.galois_apply(t).unwrap());
        prop_assert_eq!((&a + &b).galois_apply(t).unwrap(), &a.galois_apply(t).unwrap() + &b.galois_apply(t).unwrap());
    }
}

#[test]
fn generator_has_order_q_minus_one() {
    let m = primitive_root(11).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..100 {
        let a = element(11).new_tree(&mut runner).unwrap().current();
        let mut b = a.clone();
        for i in 1..=10 {
            b = b.galois_apply(m).unwrap();
            assert_eq!(b == a, i == 10, "power {i}");
        }
    }
}

fn valid_pairs(max_q: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for q in (3..=max_q).filter(|&q| is_prime_u64(q)) {
        for n in (2..q).filter(|n| (q - 1) % n == 0) {
            out.push((q, n));
        }
    }
    out
}

#[test]
fn period_degrees_and_numeric_oracle() {
    for (q, n) in valid_pairs(50) {
        let m = primitive_root(q).unwrap();
        let a = gaussian_period(q, n, m).unwrap();
        let f = minimal_polynomial(&a, n, m).unwrap();
        assert_eq!(f.degree(), Some(n as usize), "q={q} n={n}");
        let approx = common::period_min_poly_numeric(q, n, m);
        for (exact, x) in f.coeffs().iter().zip(&approx) {
            let e = exact.to_f64().unwrap();
            assert!((e - x).abs() <= 1e-6 * e.abs().max(1.0), "q={q} n={n}: {e} vs {x}");
        }
    }
}

#[test]
fn period_summands_are_distinct() {
    for (q, n) in valid_pairs(50) {
        let m = primitive_root(q).unwrap();
        let mut e = period_exponents(q, n, m);
        assert!(e.iter().enumerate().all(|(j, &x)| x == common::pow_mod(m, j as u64 * n, q)));
        e.sort_unstable();
        e.dedup();
        assert_eq!(e.len() as u64, (q - 1) / n);
    }
}

#[test]
fn odd_index_periods_are_not_real() {
    for (q, n) in valid_pairs(50) {
        if n % 2 == 1 || ((q - 1) / n) % 2 == 0 {
            continue;
        }
        let m = primitive_root(q).unwrap();
        let a = gaussian_period(q, n, m).unwrap();
        assert!(!a.is_real(), "q={q} n={n}");
        let f = minimal_polynomial(&a, n, m).unwrap();
        assert!(certify_irreducible(&f, 60).is_ok(), "q={q} n={n}");
        assert!(count_real_roots(&f).unwrap() < n as usize);
    }
}

#[test]
fn even_index_periods_are_real() {
    // (q - 1)/n even: the subgroup contains -1, so the period is real
    for (q, n) in valid_pairs(30) {
        if ((q - 1) / n) % 2 == 0 {
            let m = primitive_root(q).unwrap();
            assert!(gaussian_period(q, n, m).unwrap().is_real(), "q={q} n={n}");
        }
    }
}
