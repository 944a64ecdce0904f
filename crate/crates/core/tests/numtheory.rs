mod common;

use galprime::numtheory::{find_q, is_prime, is_prime_u64, mod_pow, primitive_root, DEFAULT_SEARCH_LIMIT};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

#[test]
fn find_q_properties() {
    for n in (2..=100).step_by(2) {
        let q = find_q(n, DEFAULT_SEARCH_LIMIT).unwrap().q;
        assert!(common::is_prime_naive(q), "n = {n}");
        assert_eq!(q % n, 1);
        assert_eq!((q - 1) / n % 2, 1);
        // no smaller member of the progression is prime
        let mut k = 1;
        while (2 * k - 1) * n + 1 < q {
            assert!(!common::is_prime_naive((2 * k - 1) * n + 1));
            k += 1;
        }
    }
}

#[test]
fn primitive_roots_have_full_order() {
    for q in (3..1000).filter(|&q| common::is_prime_naive(q)) {
        let g = primitive_root(q).unwrap();
        assert_eq!(common::order_mod(g, q), q - 1, "q = {q}");
        assert!((2..g).all(|h| common::order_mod(h, q) < q - 1), "q = {q} has a smaller root");
    }
}

#[test]
fn primality_agrees_with_trial_division() {
    for n in 0..20_000u64 {
        assert_eq!(is_prime_u64(n), common::is_prime_naive(n), "n = {n}");
    }
}

proptest! {
    #[test]
    fn mod_pow_is_multiplicative_in_exponent(b in -10i64.pow(9)..10i64.pow(9), e1 in 0u64..5000, e2 in 0u64..5000, m in 2i64..10i64.pow(12)) {
        let (bb, mm) = (BigInt::from(b), BigInt::from(m));
        let lhs = mod_pow(&bb, &BigUint::from(e1 + e2), &mm);
        let rhs = mod_pow(&bb, &BigUint::from(e1), &mm) * mod_pow(&bb, &BigUint::from(e2), &mm) % &mm;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn big_and_word_primality_agree(n in 0u64..u64::MAX) {
        prop_assert_eq!(is_prime(&BigUint::from(n)), is_prime_u64(n));
    }

    #[test]
    fn products_of_two_primes_are_composite(a in 1_000_000u64..2_000_000, b in 1_000_000_000u64..2_000_000_000) {
        let p = (a..).find(|&x| is_prime_u64(x)).unwrap();
        let q = (b..).find(|&x| is_prime_u64(x)).unwrap();
        prop_assert!(!is_prime(&(BigUint::from(p) * BigUint::from(q) * BigUint::from(q))));
    }
}
