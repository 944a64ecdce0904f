//! Independent reference implementations used to cross-check the library.
//! Each one is deliberately naive.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant as the Sylvester determinant; coefficients ascending.
pub fn sylvester_resultant(f: &[i64], g: &[i64]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, &c) in f.iter().rev().enumerate() {
            row[i + j] = c.into();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, &c) in g.iter().rev().enumerate() {
            row[i + j] = c.into();
        }
        rows.push(row);
    }
    determinant(rows)
}

fn eval_rat(c: &[BigInt], x: &BigRational) -> BigRational {
    c.iter()
        .rev()
        .fold(BigRational::zero(), |acc, a| acc * x + BigRational::from_integer(a.clone()))
}

/// Number of distinct real roots of a squarefree polynomial by interval
/// bisection: start from `(-B, B]` with `B` above the Cauchy bound and split
/// until each piece either provably has no root or is provably monotone.
pub fn bisection_root_count(c: &[i64]) -> usize {
    let c: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    let lc = c.last().unwrap().abs();
    let max = c.iter().map(|a| a.abs()).max().unwrap();
    let bound = BigRational::from_integer(BigInt::from(2) + (max + &lc - 1) / &lc);
    let d: Vec<BigInt> = c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect();
    roots_in(&c, &d, &(-bound.clone()), &bound, 0)
}

/// True when interval Horner evaluation shows `f` has no zero on `[a, b]`.
fn no_root(c: &[BigInt], a: &BigRational, b: &BigRational) -> bool {
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for coef in c.iter().rev() {
        let cands = [&lo * a, &lo * b, &hi * a, &hi * b];
        let k = BigRational::from_integer(coef.clone());
        lo = cands.iter().min().unwrap() + &k;
        hi = cands.iter().max().unwrap() + &k;
    }
    lo.is_positive() || hi.is_negative()
}

/// Roots in `(a, b]`.
fn roots_in(c: &[BigInt], d: &[BigInt], a: &BigRational, b: &BigRational, depth: u32) -> usize {
    assert!(depth < 400, "bisection did not isolate the roots");
    if no_root(c, a, b) {
        return 0;
    }
    if d.is_empty() || no_root(d, a, b) {
        let fa = eval_rat(c, a);
        let fb = eval_rat(c, b);
        return usize::from(fb.is_zero() || (!fa.is_zero() && fa.is_positive() != fb.is_positive()));
    }
    let mid = (a + b) / BigRational::from_integer(2.into());
    roots_in(c, d, a, &mid, depth + 1) + roots_in(c, d, &mid, b, depth + 1)
}

/// Polynomials over `F_ell`, ascending coefficients, trimmed.
fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_mod(a: &[u64], d: &[u64], ell: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    let inv = (1..ell).find(|&i| i * d[dd] % ell == 1).unwrap();
    while r.len() > dd && !r.is_empty() {
        let t = r[r.len() - 1] * inv % ell;
        let shift = r.len() - 1 - dd;
        for (i, &c) in d.iter().enumerate() {
            r[shift + i] = (r[shift + i] + ell * ell - t * c % ell) % ell;
        }
        r = trim(r);
    }
    r
}

fn div_mod(a: &[u64], d: &[u64], ell: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    let inv = (1..ell).find(|&i| i * d[dd] % ell == 1).unwrap();
    let mut q = vec![0u64; a.len() - dd];
    while r.len() > dd {
        let t = r[r.len() - 1] * inv % ell;
        let shift = r.len() - 1 - dd;
        q[shift] = t;
        for (i, &c) in d.iter().enumerate() {
            r[shift + i] = (r[shift + i] + ell * ell - t * c % ell) % ell;
        }
        r = trim(r);
    }
    q
}

/// Factor degrees of `f mod ell` (with multiplicity) by trial division with
/// every monic polynomial of increasing degree. Only for small `ell`.
pub fn brute_factor_degrees(f: &[i64], ell: u64) -> Vec<usize> {
    let l = ell as i64;
    let mut rest = trim(f.iter().map(|&c| c.rem_euclid(l) as u64).collect());
    let mut out = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.push(rest.len() - 1);
            break;
        }
        let mut found = false;
        for code in 0..ell.pow(d as u32) {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push(c % ell);
                c /= ell;
            }
            cand.push(1);
            if rem_mod(&rest, &cand, ell).is_empty() {
                rest = div_mod(&rest, &cand, ell);
                out.push(d);
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Group closure by breadth-first multiplication; permutations as image
/// vectors. Returns the cycle-type counts.
pub fn closure_census(gens: &[Vec<usize>]) -> BTreeMap<Vec<u32>, u64> {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    let mut census = BTreeMap::new();
    for g in &seen {
        *census.entry(cycle_lengths(g)).or_insert(0) += 1;
    }
    census
}

pub fn cycle_lengths(g: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = g[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Cycle-type counts of `x -> a x + b` over `F_p`, `a` ranging over the
/// subgroup of order `n` of the units.
pub fn affine_census(p: u64, n: u64) -> BTreeMap<Vec<u32>, u64> {
    let units: Vec<u64> = (1..p).filter(|&a| pow_mod(a, n, p) == 1).collect();
    assert_eq!(units.len() as u64, n);
    let mut census = BTreeMap::new();
    for &a in &units {
        for b in 0..p {
            let g: Vec<usize> = (0..p).map(|x| ((a * x + b) % p) as usize).collect();
            *census.entry(cycle_lengths(&g)).or_insert(0) += 1;
        }
    }
    census
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Multiplicative order of `g` mod `q` by repeated multiplication.
pub fn order_mod(g: u64, q: u64) -> u64 {
    let mut x = g % q;
    let mut k = 1;
    while x != 1 {
        x = x * g % q;
        k += 1;
    }
    k
}

/// Literal transcription of the decision rule:
///
/// ```text
/// if k > 0 and p >= 4k + 1 then
///     if k is odd then S_p
///     else if disc is a square then A_p else S_p
/// else reduction
/// ```
pub fn decision_rule(p: usize, k: usize, square: bool) -> &'static str {
    if k > 0 && p >= 4 * k + 1 {
        if k % 2 == 1 {
            "S"
        } else if square {
            "A"
        } else {
            "S"
        }
    } else {
        "reduction"
    }
}

/// Monic minimal polynomial of the Gaussian period, rounded from a
/// floating-point product over the complex conjugates.
pub fn period_min_poly_numeric(q: u64, n: u64, m: u64) -> Vec<f64> {
    let exps: Vec<u64> = (0..(q - 1) / n).map(|j| pow_mod(m, j * n, q)).collect();
    let mut poly: Vec<(f64, f64)> = vec![(1.0, 0.0)];
    for t in 0..n {
        let s = pow_mod(m, t, q);
        let (mut re, mut im) = (0.0, 0.0);
        for &e in &exps {
            let ang = 2.0 * std::f64::consts::PI * ((e * s) % q) as f64 / q as f64;
            re += ang.cos();
            im += ang.sin();
        }
        let mut next = vec![(0.0, 0.0); poly.len() + 1];
        for (i, &(a, b)) in poly.iter().enumerate() {
            next[i + 1].0 += a;
            next[i + 1].1 += b;
            next[i].0 -= a * re - b * im;
            next[i].1 -= a * im + b * re;
        }
        poly = next;
    }
    poly.into_iter().map(|(a, _)| a).collect()
}
