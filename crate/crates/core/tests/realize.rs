mod common;

use galprime::classifier::Solvability;
use galprime::realize::{
    realization_consistency_check, realize_cyclic_nonreal, realize_frobenius, realize_full_frobenius, Construction,
    EmbeddingStatus, Target, Verification,
};
use galprime::IntPoly;

#[test]
fn cyclic_outputs_frozen() {
    // values fixed by a high-precision product over the complex conjugates
    let expected: [(u64, u64, u64, &[i64]); 5] = [
        (2, 3, 2, &[1, 1, 1]),
        (4, 5, 2, &[1, 1, 1, 1, 1]),
        (6, 7, 3, &[1, 1, 1, 1, 1, 1, 1]),
        (8, 41, 6, &[59, -160, 153, -53, 44, 11, 3, 1, 1]),
        (10, 11, 2, &[1; 11]),
    ];
    for (n, q, m, coeffs) in expected {
        let r = realize_cyclic_nonreal(n).unwrap();
        assert_eq!(r.polynomial, IntPoly::from_i64s(coeffs), "n = {n}");
        let Construction::GaussianPeriod { prime, primitive_root, .. } = &r.construction else { panic!() };
        assert_eq!((prime.q, *primitive_root), (q, m));
        let Verification::Cyclic(c) = &r.verification else { panic!() };
        assert_eq!(c.real_roots, 0);
        assert_eq!(common::bisection_root_count(coeffs), 0);
    }
}

#[test]
fn frobenius_family_is_consistent() {
    for p in [5, 7, 11, 13, 17, 19, 23] {
        let r = realize_full_frobenius(p).unwrap();
        assert_eq!(r.polynomial, IntPoly::binomial(p, &2.into()));
        assert_eq!(r.target, Target::Frobenius { p, n: p - 1 });
        let c = realization_consistency_check(&r);
        assert!(c.passed, "p = {p}\n{c}");
        let Verification::Classified(report) = &r.verification else { panic!() };
        assert_eq!(report.solvability, Solvability::SolvableFrobenius);
    }
}

#[test]
fn deterministic() {
    assert_eq!(realize_cyclic_nonreal(12).unwrap(), realize_cyclic_nonreal(12).unwrap());
    assert_eq!(realize_full_frobenius(7).unwrap(), realize_full_frobenius(7).unwrap());
}

#[test]
fn partial_frobenius_targets() {
    for (p, n) in [(7, 2), (13, 4), (13, 6), (11, 10)] {
        let r = realize_frobenius(p, n).unwrap();
        let complete = n == p - 1;
        assert_eq!(r.embedding_status == EmbeddingStatus::Complete, complete, "p={p} n={n}");
        assert_eq!(r.polynomial.degree(), Some(if complete { p } else { n }));
        assert!(realization_consistency_check(&r).passed);
    }
    assert!(realize_frobenius(7, 3).is_err());
}

#[test]
fn cyclic_degrees_up_to_thirty() {
    for n in (2..=30).step_by(2) {
        let r = realize_cyclic_nonreal(n).unwrap();
        assert_eq!(r.polynomial.degree(), Some(n as usize));
        let c = realization_consistency_check(&r);
        assert!(c.passed, "n = {n}\n{c}");
    }
}

#[test]
fn serialized_trail() {
    let r = realize_cyclic_nonreal(8).unwrap();
    let j = r.to_json();
    assert_eq!(j["construction"]["q"], 41);
    assert_eq!(j["construction"]["kind"], "gaussian_period");
    assert!(r.to_text().contains("q: 41\n"));
    let f = realize_full_frobenius(5).unwrap().to_json();
    assert_eq!(f["verification"]["verdict"], "F20");
    assert_eq!(f["construction"]["a"], "2");
}
