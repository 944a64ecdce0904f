//! Primality, primitive roots and the prime search for Gaussian-period
//! constructions.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Miller-Rabin with the first 13 prime bases is exact below this bound.
const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";
const SMALL_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const PROBABILISTIC_ROUNDS: u32 = 64;

pub const DEFAULT_SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimalityMethod {
    Deterministic,
    Probabilistic { rounds: u32 },
}

/// A prime `q` together with how its primality was established.
///
/// `q` indexes dense cyclotomic coordinate vectors of length `q - 1`, so a
/// machine word is always enough here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub q: u64,
    pub method: PrimalityMethod,
}

pub fn primality_method(n: &BigUint) -> PrimalityMethod {
    if *n < DETERMINISTIC_LIMIT.parse::<BigUint>().unwrap() {
        PrimalityMethod::Deterministic
    } else {
        PrimalityMethod::Probabilistic {
            rounds: PROBABILISTIC_ROUNDS,
        }
    }
}

pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &b in &SMALL_BASES {
        if (n % b).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;

    let witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };

    match primality_method(n) {
        PrimalityMethod::Deterministic => SMALL_BASES.iter().all(|&b| witness(&BigUint::from(b))),
        PrimalityMethod::Probabilistic { rounds } => {
            // Seeded from n so repeated calls agree.
            let digest = n.to_u64_digits();
            let seed = digest.iter().fold(0x9e37_79b9_7f4a_7c15u64, |h, &w| {
                (h ^ w).wrapping_mul(0x1000_0000_01b3)
            });
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let two = BigUint::from(2u32);
            (0..rounds).all(|_| witness(&rng.gen_biguint_range(&two, &n_minus_1)))
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// `b^e mod m` in `[0, m - 1]`.
pub fn mod_pow(b: &BigInt, e: &BigUint, m: &BigInt) -> BigInt {
    let b = b.mod_floor(m);
    b.modpow(&BigInt::from(e.clone()), m)
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `q = (1 - n) + 2n*k`, `k = 1, 2, ...`, so that `q = 1 mod n`
/// with `(q - 1)/n` odd.
pub fn find_q(n: u64, search_limit: u64) -> Result<PrimeWitness> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("n = {n} must be even and >= 2")));
    }
    for k in 1..=search_limit {
        let Some(q) = (2 * k - 1).checked_mul(n).and_then(|t| t.checked_add(1)) else {
            break;
        };
        if is_prime_u64(q) {
            return Ok(PrimeWitness {
                q,
                method: PrimalityMethod::Deterministic,
            });
        }
    }
    Err(Error::SearchExhausted { n, limit: search_limit })
}

/// Smallest generator of the multiplicative group mod the prime `q`.
pub fn primitive_root(q: u64) -> Result<u64> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!("primitive root needs q >= 3, got {q}")));
    }
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    let factors = prime_factors(q - 1);
    (2..q)
        .find(|&m| factors.iter().all(|&l| mod_pow_u64(m, (q - 1) / l, q) != 1))
        .ok_or(Error::NotPrime(q))
}

/// Ascending primes starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_prime_u64(n))
}
