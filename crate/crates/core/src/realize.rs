//! Polynomials with prescribed Galois groups.
//!
//! Two constructions are fully explicit: non-real cyclic extensions of even
//! degree `n` from Gaussian periods, and `x^p - 2` for the full Frobenius
//! group of order `p(p-1)`. Other Frobenius groups `F_pn` would need an
//! embedding step with no known construction; for those only the cyclic
//! base field is produced.

use std::fmt;

use num_bigint::BigInt;
use serde_json::json;

use crate::classifier::{certify_irreducible, classify, ClassificationReport, ClassifyOptions, IrreducibilityCertificate, Solvability};
use crate::cyclotomic::{gaussian_period, minimal_polynomial, CyclotomicElement};
use crate::error::{Error, Result};
use crate::groups::TransitiveGroup;
use crate::numtheory::{find_q, is_prime_u64, primitive_root, PrimeWitness, DEFAULT_SEARCH_LIMIT};
use crate::poly::IntPoly;
use crate::sturm::count_real_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Cyclic { n: u64 },
    Frobenius { p: usize, n: usize },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Target::Cyclic { n } => write!(f, "C{n}"),
            Target::Frobenius { p, n } => write!(f, "{}", TransitiveGroup::Frobenius { p, n }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    GaussianPeriod {
        prime: PrimeWitness,
        primitive_root: u64,
        n: u64,
        period: CyclotomicElement,
    },
    Radical { p: usize, a: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicChecks {
    pub degree: usize,
    pub real_roots: usize,
    pub certificate: IrreducibilityCertificate,
    pub period_is_real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Classified(Box<ClassificationReport>),
    Cyclic(CyclicChecks),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingStatus {
    Complete,
    /// Only the cyclic base field was built; the polynomial does not have the
    /// target group.
    BaseStepOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationResult {
    pub target: Target,
    pub polynomial: IntPoly,
    pub construction: Construction,
    pub verification: Verification,
    pub embedding_status: EmbeddingStatus,
    pub note: Option<String>,
}

/// Degree-`n` non-real cyclic field from the Gaussian period of a prime
/// `q = 1 mod n` with `(q - 1)/n` odd.
pub fn realize_cyclic_nonreal(n: u64) -> Result<RealizationResult> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("n = {n} must be even and >= 2")));
    }
    let prime = find_q(n, DEFAULT_SEARCH_LIMIT)?;
    let m = primitive_root(prime.q)?;
    let period = gaussian_period(prime.q, n, m)?;
    let polynomial = minimal_polynomial(&period, n, m)?;
    let checks = CyclicChecks {
        degree: polynomial.degree().unwrap_or(0),
        real_roots: count_real_roots(&polynomial)?,
        certificate: certify_irreducible(&polynomial, crate::classifier::DEFAULT_EFFORT)?,
        period_is_real: period.is_real(),
    };
    Ok(RealizationResult {
        target: Target::Cyclic { n },
        polynomial,
        construction: Construction::GaussianPeriod {
            prime,
            primitive_root: m,
            n,
            period,
        },
        verification: Verification::Cyclic(checks),
        embedding_status: EmbeddingStatus::Complete,
        note: None,
    })
}

/// `x^p - 2`, checked by the classifier to have group `F_{p(p-1)}`.
pub fn realize_full_frobenius(p: usize) -> Result<RealizationResult> {
    if p < 5 || !is_prime_u64(p as u64) {
        return Err(Error::NonPrimeDegree(p));
    }
    let a = BigInt::from(2);
    let polynomial = IntPoly::binomial(p, &a);
    let report = classify(&polynomial, &ClassifyOptions::default())?;
    let want = TransitiveGroup::Frobenius { p, n: p - 1 };
    if report.verdict.group() != want || report.r != 1 || report.k != (p - 1) / 2 {
        return Err(Error::VerificationFailed(format!(
            "x^{p} - 2 classified as {} with {} real roots",
            report.verdict, report.r
        )));
    }
    Ok(RealizationResult {
        target: Target::Frobenius { p, n: p - 1 },
        polynomial,
        construction: Construction::Radical { p, a },
        verification: Verification::Classified(Box::new(report)),
        embedding_status: EmbeddingStatus::Complete,
        note: None,
    })
}

/// `F_pn` for even `n | p - 1`. Only `n = p - 1` is built completely; other
/// `n` return the degree-`n` cyclic polynomial as the base step.
pub fn realize_frobenius(p: usize, n: usize) -> Result<RealizationResult> {
    if p < 5 || !is_prime_u64(p as u64) {
        return Err(Error::NonPrimeDegree(p));
    }
    if n < 2 || n % 2 == 1 || (p - 1) % n != 0 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} must be even and divide p - 1 = {}",
            p - 1
        )));
    }
    if n == p - 1 {
        return realize_full_frobenius(p);
    }
    let base = realize_cyclic_nonreal(n as u64)?;
    Ok(RealizationResult {
        target: Target::Frobenius { p, n },
        note: Some(format!(
            "degree-{n} cyclic base field only; lifting it to a degree-{p} polynomial with group F{} is not constructive",
            p * n
        )),
        embedding_status: EmbeddingStatus::BaseStepOnly,
        ..base
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub passed: bool,
    pub items: Vec<(String, bool)>,
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (what, ok) in &self.items {
            writeln!(f, "[{}] {what}", if *ok { "ok" } else { "FAIL" })?;
        }
        write!(f, "{}", if self.passed { "consistent" } else { "inconsistent" })
    }
}

/// Re-derives the claimed properties of a realization.
pub fn realization_consistency_check(res: &RealizationResult) -> ConsistencyReport {
    let mut items = Vec::new();
    let mut check = |what: String, ok: bool| items.push((what, ok));
    let degree = res.polynomial.degree().unwrap_or(0);
    let real = count_real_roots(&res.polynomial).ok();

    match (&res.target, &res.verification, res.embedding_status) {
        (Target::Frobenius { p, n }, Verification::Classified(report), _) => {
            check(format!("degree is {p}"), degree == *p);
            check("report matches the polynomial".into(), report.polynomial == res.polynomial);
            check(format!("exactly one real root (found {real:?})"), real == Some(1));
            check("report agrees on real roots".into(), Some(report.r) == real);
            check(format!("complex pairs k = {} > 0", report.k), report.k > 0);
            check(
                format!("solvability is SolvableFrobenius ({})", report.solvability),
                report.solvability == Solvability::SolvableFrobenius,
            );
            let want = TransitiveGroup::Frobenius { p: *p, n: *n };
            check(
                format!("group is {want} ({})", report.verdict.group()),
                report.verdict.group() == want,
            );
        }
        (target, Verification::Cyclic(c), status) => {
            let n = match (target, status) {
                (Target::Cyclic { n }, _) => *n as usize,
                (Target::Frobenius { n, .. }, EmbeddingStatus::BaseStepOnly) => *n,
                _ => {
                    check("cyclic checks attached to a complete Frobenius target".into(), false);
                    0
                }
            };
            check(format!("degree is {n}"), degree == n && c.degree == n);
            check(
                format!("irreducible ({})", c.certificate),
                certify_irreducible(&res.polynomial, crate::classifier::DEFAULT_EFFORT).is_ok(),
            );
            check(
                format!("fewer than {n} real roots (found {real:?})"),
                real.is_some_and(|r| r < n) && Some(c.real_roots) == real,
            );
            check("generator is not real".into(), !c.period_is_real);
        }
        (_, Verification::Classified(_), _) => check("classifier report attached to a cyclic target".into(), false),
    }
    ConsistencyReport {
        passed: items.iter().all(|(_, ok)| *ok),
        items,
    }
}

impl RealizationResult {
    fn trail(&self) -> serde_json::Value {
        match &self.construction {
            Construction::GaussianPeriod {
                prime,
                primitive_root,
                n,
                period,
            } => json!({
                "kind": "gaussian_period",
                "q": prime.q,
                "primitive_root": primitive_root,
                "n": n,
                "period": period.to_string(),
            }),
            Construction::Radical { p, a } => json!({
                "kind": "radical",
                "p": p,
                "a": a.to_string(),
            }),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let verification = match &self.verification {
            Verification::Classified(r) => r.to_json(),
            Verification::Cyclic(c) => json!({
                "degree": c.degree,
                "real_roots": c.real_roots,
                "certificate": c.certificate.to_string(),
                "period_is_real": c.period_is_real,
            }),
        };
        json!({
            "target": self.target.to_string(),
            "polynomial": self.polynomial.to_string(),
            "construction": self.trail(),
            "embedding_status": format!("{:?}", self.embedding_status),
            "note": self.note,
            "verification": verification,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("target: {}\npolynomial: {}\n", self.target, self.polynomial);
        match &self.construction {
            Construction::GaussianPeriod {
                prime,
                primitive_root,
                n,
                period,
            } => {
                s += &format!("q: {}\nprimitive_root: {primitive_root}\nn: {n}\nperiod: {period}\n", prime.q);
            }
            Construction::Radical { p, a } => s += &format!("p: {p}\na: {a}\n"),
        }
        s += &format!("embedding_status: {:?}\n", self.embedding_status);
        if let Some(note) = &self.note {
            s += &format!("note: {note}\n");
        }
        match &self.verification {
            Verification::Classified(r) => s += &r.to_text(),
            Verification::Cyclic(c) => {
                s += &format!(
                    "degree: {}\nreal_roots: {}\ncertificate: {}\nperiod_is_real: {}\n",
                    c.degree, c.real_roots, c.certificate, c.period_is_real
                );
            }
        }
        s
    }
}
