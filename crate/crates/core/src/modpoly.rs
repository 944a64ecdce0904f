//! Dense polynomials over a prime field `F_l` with word-sized `l`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::numtheory::mod_pow_u64;
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { modulus, coeffs }
    }

    pub fn from_int(f: &IntPoly, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().unwrap())
            .collect();
        Self::new(modulus, coeffs)
    }

    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        mod_pow_u64(a, self.modulus - 2, self.modulus)
    }

    pub fn monic(&self) -> ModPoly {
        let Some(&lc) = self.coeffs.last() else {
            return self.clone();
        };
        let inv = self.inv(lc);
        ModPoly::new(
            self.modulus,
            self.coeffs.iter().map(|&c| self.mul_mod(c, inv)).collect(),
        )
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let m = self.modulus;
        ModPoly::new(
            m,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    (a + m - b) % m
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::new(self.modulus, Vec::new());
        }
        let m = self.modulus as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % m;
            }
        }
        ModPoly::new(self.modulus, out.into_iter().map(|c| c as u64).collect())
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let m = self.modulus;
        let inv = self.inv(*d.coeffs.last().unwrap());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (ModPoly::new(m, Vec::new()), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let t = self.mul_mod(r[top], inv);
            q[top - dd] = t;
            if t == 0 {
                continue;
            }
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = (r[idx] + m - self.mul_mod(t, dc)) % m;
            }
        }
        r.truncate(dd);
        (ModPoly::new(m, q), ModPoly::new(m, r))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        let m = self.modulus;
        ModPoly::new(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul_mod(c, i as u64 % m))
                .collect(),
        )
    }

    /// `self^e mod modulus_poly`.
    pub fn pow_mod(&self, mut e: u64, modulus_poly: &ModPoly) -> ModPoly {
        let mut base = self.rem(modulus_poly);
        let mut acc = ModPoly::new(self.modulus, vec![1]).rem(modulus_poly);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus_poly);
            }
            base = base.mul(&base).rem(modulus_poly);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, with
    /// multiplicity, in descending order (distinct-degree factorization).
    pub fn factor_degrees(&self) -> Vec<usize> {
        let m = self.modulus;
        let mut rest = self.monic();
        let mut degrees = Vec::new();
        let x = ModPoly::x(m);
        let mut h = x.clone();
        let mut i = 1;
        while rest.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(m, &rest);
            let g = h.sub(&x).gcd(&rest);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 {
                degrees.extend(std::iter::repeat_n(i, dg / i));
                rest = rest.div_rem(&g).0;
                h = h.rem(&rest);
            }
            i += 1;
        }
        if let Some(d) = rest.degree().filter(|&d| d > 0) {
            degrees.push(d);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(n) => self.is_squarefree() && self.factor_degrees() == vec![n],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(m: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(m, c.to_vec())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = mp(7, &[3, 1, 4, 1, 5, 2]);
        let d = mp(7, &[2, 0, 3]);
        let (q, r) = a.div_rem(&d);
        let back = q.mul(&d);
        let back = ModPoly::new(
            7,
            (0..6)
                .map(|i| back.coeffs().get(i).copied().unwrap_or(0) + r.coeffs().get(i).copied().unwrap_or(0))
                .collect(),
        );
        assert_eq!(back, a);
    }

    #[test]
    fn quadratic_patterns() {
        assert_eq!(mp(3, &[1, 0, 1]).factor_degrees(), vec![2]);
        assert_eq!(mp(5, &[1, 0, 1]).factor_degrees(), vec![1, 1]);
    }

    #[test]
    fn quintic_mod_three() {
        // x^5 - 2 = (x + 1)(x^4 - x^3 + x^2 - x + 1) mod 3
        let f = ModPoly::from_int(&IntPoly::from_i64s(&[-2, 0, 0, 0, 0, 1]), 3);
        assert_eq!(f.factor_degrees(), vec![4, 1]);
    }

    #[test]
    fn irreducibility() {
        assert!(mp(2, &[1, 1, 1]).is_irreducible());
        assert!(!mp(2, &[1, 0, 1]).is_irreducible());
        assert!(mp(2, &[1, 1, 0, 1]).is_irreducible());
        // x^4 + 1 is reducible mod every prime
        for ell in [3, 5, 7, 11, 13] {
            assert!(!mp(ell, &[1, 0, 0, 0, 1]).is_irreducible());
        }
    }

    #[test]
    fn squarefree() {
        assert!(!mp(5, &[1, 2, 1]).is_squarefree());
        assert!(mp(5, &[1, 0, 1]).is_squarefree());
        // x^3 - x mod 3 is squarefree, x^3 mod 3 is not
        assert!(mp(3, &[0, 2, 0, 1]).is_squarefree());
        assert!(!mp(3, &[0, 0, 0, 1]).is_squarefree());
    }
}
