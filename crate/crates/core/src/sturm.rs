//! Exact real-root counting with Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Signed remainder chain `f, f', -rem(f, f'), ...`, each remainder reduced to
/// its primitive part by a positive factor so signs are unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(f: &IntPoly) -> Result<Self> {
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Err(Error::DegreeTooSmall(0));
        }
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let len = chain.len();
            let (a, b) = (&chain[len - 2], &chain[len - 1]);
            if b.is_constant() {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let mut r = a.pseudo_rem(b);
            // prem multiplies by lc(b)^(delta+1); undo a negative factor.
            if b.leading_sign() < 0 && delta % 2 == 0 {
                r = -r;
            }
            if r.is_zero() {
                return Err(Error::NotSquarefree);
            }
            chain.push(-r.primitive_part());
        }
        Ok(SturmSequence { chain })
    }

    pub fn chain(&self) -> &[IntPoly] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|g| {
            let s = g.leading_sign();
            if !positive && g.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|g| g.sign_at(x)))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b, "empty interval");
        self.variations_at(a) - self.variations_at(b)
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

pub fn sturm_chain(f: &IntPoly) -> Result<SturmSequence> {
    SturmSequence::new(f)
}

pub fn count_real_roots(f: &IntPoly) -> Result<usize> {
    Ok(SturmSequence::new(f)?.count_real())
}

/// `k = (deg f - r) / 2`, the number of complex-conjugate root pairs.
pub fn complex_pair_count(f: &IntPoly) -> Result<usize> {
    let r = count_real_roots(f)?;
    Ok((f.degree().unwrap() - r) / 2)
}

/// Power of two strictly exceeding every root's absolute value
/// (Cauchy: `1 + max |a_i / a_n|`).
pub fn cauchy_bound(f: &IntPoly) -> BigInt {
    let lc = f.leading_coeff().expect("nonzero polynomial").abs();
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = max / lc + 2u32;
    let mut b = BigInt::from(1u32);
    while b < bound {
        b <<= 1;
    }
    b
}
