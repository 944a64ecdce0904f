//! Exact arithmetic in `Z[zeta_q]` for a prime `q`.
//!
//! Elements are stored on the integral basis `1, zeta, ..., zeta^(q-2)`, so
//! every element has exactly one coordinate vector and equality is plain
//! vector equality. Powers `zeta^(q-1)` are folded back with
//! `zeta^(q-1) = -(1 + zeta + ... + zeta^(q-2))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime_u64, mod_pow_u64, prime_factors};
use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicElement {
    q: u64,
    coords: Vec<BigInt>,
}

/// Folds a length-`q` vector indexed by exponent onto the basis.
fn fold(q: u64, mut by_exp: Vec<BigInt>) -> Vec<BigInt> {
    debug_assert_eq!(by_exp.len(), q as usize);
    let top = by_exp.pop().unwrap();
    if !top.is_zero() {
        for c in by_exp.iter_mut() {
            *c -= &top;
        }
    }
    by_exp
}

impl CyclotomicElement {
    /// Panics unless `coords.len() == q - 1`.
    pub fn new(q: u64, coords: Vec<BigInt>) -> Self {
        assert!(q >= 3, "conductor must be an odd prime");
        assert_eq!(coords.len() as u64, q - 1, "need q - 1 coordinates");
        CyclotomicElement { q, coords }
    }

    pub fn zero(q: u64) -> Self {
        Self::new(q, vec![BigInt::zero(); (q - 1) as usize])
    }

    pub fn from_integer(q: u64, c: BigInt) -> Self {
        let mut z = Self::zero(q);
        z.coords[0] = c;
        z
    }

    pub fn one(q: u64) -> Self {
        Self::from_integer(q, BigInt::one())
    }

    /// `zeta^e` on the basis.
    pub fn reduce_power(q: u64, e: u64) -> Self {
        let mut by_exp = vec![BigInt::zero(); q as usize];
        by_exp[(e % q) as usize] = BigInt::one();
        Self::new(q, fold(q, by_exp))
    }

    pub fn zeta(q: u64) -> Self {
        Self::reduce_power(q, 1)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The integer `c` when the element is `c * 1`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::MixedConductor(self.q, other.q));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self::new(self.q, coords))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self::new(self.q, coords))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let q = self.q as usize;
        let mut by_exp = vec![BigInt::zero(); q];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    by_exp[(i + j) % q] += a * b;
                }
            }
        }
        Ok(Self::new(self.q, fold(self.q, by_exp)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.q, self.coords.iter().map(|a| a * c).collect())
    }

    /// Image under the automorphism `zeta -> zeta^t`.
    pub fn galois_apply(&self, t: u64) -> Result<Self> {
        let q = self.q;
        if t % q == 0 {
            return Err(Error::NotCoprime { t, q });
        }
        let mut by_exp = vec![BigInt::zero(); q as usize];
        for (i, a) in self.coords.iter().enumerate() {
            by_exp[((i as u128 * t as u128) % q as u128) as usize] += a;
        }
        Ok(Self::new(q, fold(q, by_exp)))
    }

    /// Complex conjugate, i.e. `zeta -> zeta^(q-1)`.
    pub fn conjugate(&self) -> Self {
        self.galois_apply(self.q - 1).unwrap()
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: Self) -> CyclotomicElement {
        self.try_add(rhs).expect("matching conductors")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: Self) -> CyclotomicElement {
        self.try_sub(rhs).expect("matching conductors")
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: Self) -> CyclotomicElement {
        self.try_mul(rhs).expect("matching conductors")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement::new(self.q, self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let t = if i == 0 {
                c.to_string()
            } else if c.is_one() {
                z
            } else if *c == -BigInt::one() {
                format!("-{z}")
            } else {
                format!("{c}{z}")
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out += &format!(" - {rest}"),
                None => out += &format!(" + {t}"),
            }
        }
        f.write_str(&out)
    }
}

fn is_primitive_root(m: u64, q: u64) -> bool {
    m % q != 0 && prime_factors(q - 1).iter().all(|&l| mod_pow_u64(m, (q - 1) / l, q) != 1)
}

/// Exponents `m^(j n) mod q` for `j = 0 .. (q-1)/n - 1`.
pub fn period_exponents(q: u64, n: u64, m: u64) -> Vec<u64> {
    let step = mod_pow_u64(m, n, q);
    let mut e = 1u64;
    (0..(q - 1) / n)
        .map(|_| {
            let cur = e;
            e = (e as u128 * step as u128 % q as u128) as u64;
            cur
        })
        .collect()
}

/// Sum of `zeta^(m^(j n))` over the subgroup of index `n` in `(Z/q)^*`.
pub fn gaussian_period(q: u64, n: u64, m: u64) -> Result<CyclotomicElement> {
    if q < 3 || !is_prime_u64(q) {
        return Err(Error::InvalidParameters(format!("q = {q} must be an odd prime")));
    }
    if n < 2 || (q - 1) % n != 0 {
        return Err(Error::InvalidParameters(format!("n = {n} must be >= 2 and divide q - 1 = {}", q - 1)));
    }
    if !is_primitive_root(m, q) {
        return Err(Error::InvalidParameters(format!("{m} is not a primitive root mod {q}")));
    }
    let mut by_exp = vec![BigInt::zero(); q as usize];
    for e in period_exponents(q, n, m) {
        by_exp[e as usize] += 1;
    }
    Ok(CyclotomicElement::new(q, fold(q, by_exp)))
}

/// `prod_{j < n} (X - sigma^j(a))` for `sigma: zeta -> zeta^m`, checked to
/// have integer coefficients.
pub fn minimal_polynomial(a: &CyclotomicElement, n: u64, m: u64) -> Result<IntPoly> {
    let q = a.q;
    if n == 0 || (q - 1) % n != 0 {
        return Err(Error::InvalidParameters(format!("n = {n} must divide q - 1 = {}", q - 1)));
    }
    if a.galois_apply(mod_pow_u64(m, n, q))? != *a {
        return Err(Error::NotFixed);
    }
    let mut conjugates: Vec<CyclotomicElement> = Vec::with_capacity(n as usize);
    let mut t = 1u64;
    for _ in 0..n {
        let c = a.galois_apply(t)?;
        if conjugates.contains(&c) {
            return Err(Error::RepeatedConjugate);
        }
        conjugates.push(c);
        t = (t as u128 * m as u128 % q as u128) as u64;
    }

    // coefficients ascending; start from the constant polynomial 1
    let mut poly = vec![CyclotomicElement::one(q)];
    for c in &conjugates {
        let mut next = vec![CyclotomicElement::zero(q); poly.len() + 1];
        for (i, b) in poly.iter().enumerate() {
            next[i + 1] = &next[i + 1] + b;
            next[i] = &next[i] - &(b * c);
        }
        poly = next;
    }
    let coeffs = poly
        .iter()
        .enumerate()
        .map(|(i, c)| c.as_integer().cloned().ok_or(Error::NonRationalCoefficient(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(q: u64, c: &[i64]) -> CyclotomicElement {
        CyclotomicElement::new(q, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn powers() {
        assert_eq!(CyclotomicElement::reduce_power(5, 7), el(5, &[0, 0, 1, 0]));
        assert_eq!(CyclotomicElement::reduce_power(5, 4), el(5, &[-1, -1, -1, -1]));
        assert_eq!(CyclotomicElement::reduce_power(3, 0), el(3, &[1, 0]));
    }

    #[test]
    fn products() {
        let z = CyclotomicElement::zeta(5);
        let z3 = CyclotomicElement::reduce_power(5, 3);
        assert_eq!(&z * &z3, el(5, &[-1, -1, -1, -1]));
        let one = CyclotomicElement::one(5);
        let a = &one + &z;
        let b = &one - &z;
        assert_eq!(&a * &b, el(5, &[1, 0, -1, 0]));
        assert_eq!(z.try_mul(&CyclotomicElement::zeta(7)), Err(Error::MixedConductor(5, 7)));
    }

    #[test]
    fn galois_action() {
        let z = CyclotomicElement::zeta(7);
        assert_eq!(z.galois_apply(3).unwrap(), CyclotomicElement::reduce_power(7, 3));
        assert_eq!(z.galois_apply(14), Err(Error::NotCoprime { t: 14, q: 7 }));
        let a = el(7, &[3, -1, 4, 1, -5, 9]);
        assert_eq!(a.galois_apply(1).unwrap(), a);
    }

    #[test]
    fn reality() {
        let z = CyclotomicElement::zeta(5);
        assert!((&z + &z.conjugate()).is_real());
        assert!(!CyclotomicElement::zeta(3).is_real());
        assert!(!gaussian_period(7, 2, 3).unwrap().is_real());
    }

    #[test]
    fn periods() {
        assert_eq!(gaussian_period(3, 2, 2).unwrap(), CyclotomicElement::zeta(3));
        assert_eq!(gaussian_period(7, 2, 3).unwrap(), el(7, &[0, 1, 1, 0, 1, 0]));
        assert_eq!(gaussian_period(5, 4, 2).unwrap(), CyclotomicElement::zeta(5));
        assert!(gaussian_period(7, 4, 3).is_err());
        assert!(gaussian_period(7, 2, 2).is_err());
        assert!(gaussian_period(9, 2, 2).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let z3 = CyclotomicElement::zeta(3);
        assert_eq!(minimal_polynomial(&z3, 2, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        let a = gaussian_period(7, 2, 3).unwrap();
        assert_eq!(minimal_polynomial(&a, 2, 3).unwrap(), IntPoly::from_i64s(&[2, 1, 1]));
        let z5 = gaussian_period(5, 4, 2).unwrap();
        assert_eq!(minimal_polynomial(&z5, 4, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn minimal_polynomial_errors() {
        let z7 = CyclotomicElement::zeta(7);
        assert_eq!(minimal_polynomial(&z7, 2, 3), Err(Error::NotFixed));
        // a rational element is fixed by everything but has repeated conjugates
        let two = CyclotomicElement::from_integer(7, 2.into());
        assert_eq!(minimal_polynomial(&two, 2, 3), Err(Error::RepeatedConjugate));
    }

    #[test]
    fn display() {
        assert_eq!(el(7, &[0, 1, 1, 0, 1, 0]).to_string(), "z + z^2 + z^4");
        assert_eq!(el(5, &[-1, -1, 0, 2]).to_string(), "-1 - z + 2z^3");
        assert_eq!(CyclotomicElement::zero(3).to_string(), "0");
    }
}
