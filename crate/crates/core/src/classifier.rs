//! Galois groups of irreducible polynomials of prime degree.
//!
//! With `k` pairs of complex roots, complex conjugation is a product of `k`
//! transpositions. Once `p >= 4k + 1` the group must be `A_p` or `S_p`, and
//! the discriminant decides between them. Everything else falls back to
//! cycle-type sampling modulo primes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::TransitiveGroup;
use crate::modpoly::ModPoly;
use crate::numtheory::{is_prime_u64, primes_from};
use crate::poly::{discriminant, is_perfect_square, IntPoly};
use crate::reduction::{identify_group, FrobeniusSample, GroupVerdict, IdentifyOptions, PrimeSource};
use crate::sturm::count_real_roots;

pub const DEFAULT_EFFORT: usize = 50;

/// Why the input is known to be irreducible over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// `f mod ell` is irreducible and `ell` does not divide `lc(f)`.
    IrreducibleModEll(u64),
    /// `f(x + shift)` is Eisenstein at `prime`.
    Eisenstein { shift: i64, prime: u64 },
    /// No proper factor degree is compatible with the factorization
    /// patterns modulo all of `primes`.
    DegreeSets { primes: Vec<u64> },
    UserAsserted,
}

impl fmt::Display for IrreducibilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IrreducibleModEll(ell) => write!(f, "IrreducibleModEll({ell})"),
            Self::Eisenstein { shift, prime } => write!(f, "Eisenstein({shift}, {prime})"),
            Self::DegreeSets { primes } => {
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                write!(f, "DegreeSets({})", ps.join(", "))
            }
            Self::UserAsserted => f.write_str("UserAsserted"),
        }
    }
}

/// Primes dividing `n`, found by trial division up to a fixed bound; a
/// leftover cofactor is kept only when it is a word-sized prime.
fn small_prime_divisors(n: &BigInt) -> Vec<u64> {
    const TRIAL: u64 = 100_000;
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    for ell in (2..=TRIAL).filter(|&d| d == 2 || d % 2 == 1) {
        let b = BigInt::from(ell);
        if &b * &b > n {
            break;
        }
        if n.is_multiple_of(&b) {
            out.push(ell);
            while n.is_multiple_of(&b) {
                n /= &b;
            }
        }
    }
    if let Some(rest) = n.to_u64() {
        if rest > 1 && is_prime_u64(rest) {
            out.push(rest);
        }
    }
    out
}

/// Eisenstein prime for `f` itself, if any.
fn eisenstein_prime(f: &IntPoly) -> Option<u64> {
    let n = f.degree()?;
    let lower = &f.coeffs()[..n];
    let g = lower.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let lc = f.leading_coeff()?;
    small_prime_divisors(&g).into_iter().find(|&ell| {
        let l = BigInt::from(ell);
        !lc.is_multiple_of(&l) && !f.coeffs()[0].is_multiple_of(&(&l * &l))
    })
}

/// Subset sums of factor degrees, as a bitmask over `0..=n`.
fn degree_sums(parts: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in parts {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Squarefree input is required, since a repeated factor already proves
/// reducibility. Tries, in order: Eisenstein at shift 0, irreducibility modulo the first
/// `effort` primes not dividing `lc(f) * disc(f)`, Eisenstein at shifts in
/// `[-effort, effort]`, and finally the intersection of achievable factor
/// degrees across those primes.
pub fn certify_irreducible(f: &IntPoly, effort: usize) -> Result<IrreducibilityCertificate> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let f = f.primitive_part();
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if let Some(prime) = eisenstein_prime(&f) {
        return Ok(IrreducibilityCertificate::Eisenstein { shift: 0, prime });
    }

    let lc = f.leading_coeff().unwrap().clone();
    let mut common: Option<Vec<bool>> = None;
    let mut used = Vec::new();
    for ell in primes_from(2) {
        if used.len() >= effort {
            break;
        }
        if lc.is_multiple_of(&BigInt::from(ell)) {
            continue;
        }
        let g = ModPoly::from_int(&f, ell);
        if !g.is_squarefree() {
            continue;
        }
        used.push(ell);
        let parts = g.factor_degrees();
        if parts.len() == 1 {
            return Ok(IrreducibilityCertificate::IrreducibleModEll(ell));
        }
        let reach = degree_sums(&parts, n);
        common = Some(match common {
            None => reach,
            Some(c) => c.iter().zip(reach).map(|(a, b)| *a && b).collect(),
        });
    }

    let bound = effort as i64;
    for s in (1..=bound).flat_map(|s| [s, -s]) {
        if let Some(prime) = eisenstein_prime(&f.taylor_shift(&BigInt::from(s))) {
            return Ok(IrreducibilityCertificate::Eisenstein { shift: s, prime });
        }
    }

    if common.is_some_and(|c| c[1..n].iter().all(|&r| !r)) {
        return Ok(IrreducibilityCertificate::DegreeSets { primes: used });
    }
    Err(Error::Uncertified(effort))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    FastPathSymmetric,
    FastPathAlternating,
    ReductionFallback,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Branch choice from the number `k` of complex-conjugate root pairs.
pub fn decide_from_counts(p: usize, k: usize, disc_is_square: bool) -> Branch {
    if k > 0 && p >= 4 * k + 1 {
        if k % 2 == 1 || !disc_is_square {
            Branch::FastPathSymmetric
        } else {
            Branch::FastPathAlternating
        }
    } else {
        Branch::ReductionFallback
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Solvability {
    /// One real root and a solvable group: a Frobenius group.
    SolvableFrobenius,
    NotSolvable,
    /// All roots real and the group is cyclic or Frobenius.
    SolvableCyclicOrFrobenius,
    Undetermined,
}

impl fmt::Display for Solvability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Solvability by radicals from root counts and the group verdict.
///
/// A solvable group of prime degree is affine, so a non-identity element
/// fixes at most one point; conjugation with `k > 0` then fixes exactly one
/// root. More than one real root alongside complex ones rules solvability out.
pub fn solvability_verdict(p: usize, k: usize, r: usize, verdict: Option<&GroupVerdict>) -> Result<Solvability> {
    if r + 2 * k != p {
        return Err(Error::InconsistentCounts { p, r, k });
    }
    if k > 0 && r > 1 {
        return Ok(Solvability::NotSolvable);
    }
    let Some(v) = verdict else {
        return Ok(Solvability::Undetermined);
    };
    let solvable = v.group().is_solvable();
    Ok(match (k > 0, solvable) {
        (_, false) => Solvability::NotSolvable,
        (true, true) => Solvability::SolvableFrobenius,
        (false, true) => Solvability::SolvableCyclicOrFrobenius,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Usable primes sampled by the reduction fallback.
    pub prime_budget: usize,
    pub effort: usize,
    /// Skip certification and trust that the input is irreducible.
    pub assert_irreducible: bool,
    pub primes: PrimeSource,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            prime_budget: IdentifyOptions::default().prime_budget,
            effort: DEFAULT_EFFORT,
            assert_irreducible: false,
            primes: PrimeSource::Ascending,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Text the polynomial came from.
    pub input: String,
    /// Primitive integer polynomial actually classified.
    pub polynomial: IntPoly,
    /// Factor that turned the input into `polynomial`.
    pub scale: BigRational,
    pub p: usize,
    pub r: usize,
    pub k: usize,
    pub discriminant: BigRational,
    pub disc_is_square: bool,
    pub branch: Branch,
    pub verdict: GroupVerdict,
    pub solvability: Solvability,
    pub evidence: Vec<FrobeniusSample>,
    pub skipped_primes: Vec<u64>,
    pub certificate: IrreducibilityCertificate,
}

fn is_prime_degree(p: usize) -> bool {
    p >= 5 && is_prime_u64(p as u64)
}

pub fn classify(f: &IntPoly, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    classify_scaled(&f.to_string(), f, BigRational::one(), opts)
}

/// `classify` with the caller's source text and the scale already applied.
pub fn classify_scaled(
    input: &str,
    f: &IntPoly,
    scale: BigRational,
    opts: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let p = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !is_prime_degree(p) {
        return Err(Error::NonPrimeDegree(p));
    }
    let (content, mut g) = f.content_primitive()?;
    let mut scale = scale / BigRational::from_integer(content);
    if g.leading_sign() < 0 {
        g = -g;
        scale = -scale;
    }

    let certificate = if opts.assert_irreducible {
        IrreducibilityCertificate::UserAsserted
    } else {
        certify_irreducible(&g, opts.effort)?
    };
    let r = count_real_roots(&g)?;
    let k = (p - r) / 2;
    let disc = discriminant(&g)?;
    let disc_is_square = is_perfect_square(&disc);
    let branch = decide_from_counts(p, k, disc_is_square);

    let (verdict, evidence, skipped_primes) = match branch {
        Branch::FastPathSymmetric => (GroupVerdict::Identified(TransitiveGroup::Symmetric { p }), vec![], vec![]),
        Branch::FastPathAlternating => (GroupVerdict::Identified(TransitiveGroup::Alternating { p }), vec![], vec![]),
        Branch::ReductionFallback => {
            let id = identify_group(
                &g,
                disc_is_square,
                &IdentifyOptions {
                    prime_budget: opts.prime_budget,
                    primes: opts.primes.clone(),
                },
            )?;
            (id.verdict, id.evidence, id.skipped)
        }
    };
    let solvability = solvability_verdict(p, k, r, Some(&verdict))?;

    Ok(ClassificationReport {
        input: input.to_string(),
        polynomial: g,
        scale,
        p,
        r,
        k,
        discriminant: disc,
        disc_is_square,
        branch,
        verdict,
        solvability,
        evidence,
        skipped_primes,
        certificate,
    })
}

#[derive(Serialize)]
struct EvidenceDoc {
    prime: u64,
    cycle_type: Vec<u32>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    input: &'a str,
    polynomial: String,
    scale: String,
    degree: usize,
    real_roots: usize,
    complex_pairs: usize,
    discriminant: String,
    disc_is_square: bool,
    branch: Branch,
    verdict: String,
    heuristic: bool,
    candidates: Vec<String>,
    solvability: Solvability,
    evidence: Vec<EvidenceDoc>,
    skipped_primes: &'a [u64],
    certificate: String,
}

impl ClassificationReport {
    fn doc(&self) -> ReportDoc<'_> {
        let candidates = match &self.verdict {
            GroupVerdict::Identified(g) => vec![g.to_string()],
            GroupVerdict::CandidateSet { candidates, .. } => candidates.iter().map(ToString::to_string).collect(),
        };
        ReportDoc {
            input: &self.input,
            polynomial: self.polynomial.to_string(),
            scale: self.scale.to_string(),
            degree: self.p,
            real_roots: self.r,
            complex_pairs: self.k,
            discriminant: self.discriminant.to_string(),
            disc_is_square: self.disc_is_square,
            branch: self.branch,
            verdict: self.verdict.group().to_string(),
            heuristic: self.verdict.is_heuristic(),
            candidates,
            solvability: self.solvability,
            evidence: self
                .evidence
                .iter()
                .map(|s| EvidenceDoc {
                    prime: s.prime,
                    cycle_type: s.cycle_type.parts().to_vec(),
                })
                .collect(),
            skipped_primes: &self.skipped_primes,
            certificate: self.certificate.to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.doc()).expect("report serializes")
    }

    /// Line-oriented `key: value` form; evidence is summarized per cycle type.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: &dyn fmt::Display| s += &format!("{k}: {v}\n");
        kv("input", &self.input);
        kv("polynomial", &self.polynomial);
        kv("scale", &self.scale);
        kv("degree", &self.p);
        kv("real_roots", &self.r);
        kv("complex_pairs", &self.k);
        kv("discriminant", &self.discriminant);
        kv("disc_is_square", &self.disc_is_square);
        kv("certificate", &self.certificate);
        kv("branch", &self.branch);
        kv("verdict", &self.verdict);
        kv("solvability", &self.solvability);
        if !self.evidence.is_empty() {
            let last = self.evidence.last().unwrap().prime;
            kv("primes_sampled", &format!("{} (up to {last})", self.evidence.len()));
            let seen: BTreeSet<_> = self.evidence.iter().map(|e| &e.cycle_type).collect();
            for t in seen.into_iter().rev() {
                let first = self.evidence.iter().find(|e| &e.cycle_type == t).unwrap();
                let count = self.evidence.iter().filter(|e| &e.cycle_type == t).count();
                kv("cycle_type", &format!("{t} x{count} (first mod {})", first.prime));
            }
        }
        if !self.skipped_primes.is_empty() {
            let ps: Vec<String> = self.skipped_primes.iter().map(u64::to_string).collect();
            kv("skipped_primes", &ps.join(" "));
        }
        kv("Galois group", &self.verdict.group());
        s
    }
}
