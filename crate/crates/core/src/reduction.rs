//! Galois groups by reduction modulo primes.
//!
//! For a prime `l` not dividing `lc(f) * disc(f)`, the degrees of the
//! irreducible factors of `f mod l` are the cycle lengths of a Frobenius
//! element of the Galois group. Sampling many primes and discarding every
//! transitive group that lacks an observed cycle type narrows the candidates.
//! Eliminations are sound; the final pick among survivors is the smallest
//! group and is labelled heuristic when more than one survives.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groups::{transitive_groups, TransitiveGroup};
use crate::modpoly::ModPoly;
use crate::numtheory::primes_from;
use crate::perm::cycle_type_census;
use crate::poly::IntPoly;

pub const DEFAULT_PRIME_BUDGET: usize = 100;

/// Partition of the degree; parts kept in descending order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> CycleType {
        assert!(parts.iter().all(|&x| x > 0), "cycle lengths must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn identity(p: usize) -> CycleType {
        CycleType(vec![1; p])
    }

    pub fn full_cycle(p: usize) -> CycleType {
        CycleType(vec![p as u32])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// Sign of a permutation with this shape is `(-1)^(degree - #parts)`.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.0.len()) % 2 == 0
    }

    /// Number of moved points.
    pub fn support(&self) -> usize {
        self.0.iter().filter(|&&x| x > 1).map(|&x| x as usize).sum()
    }

    /// Elements of `S_p` with this shape: `p! / prod(k^m_k * m_k!)`.
    pub fn class_size_in_symmetric(&self) -> u128 {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in &self.0 {
            *mult.entry(k).or_default() += 1;
        }
        let mut centralizer: u128 = 1;
        for (&k, &m) in &mult {
            centralizer *= (k as u128).pow(m) * factorial(m as usize);
        }
        factorial(self.degree()) / centralizer
    }
}

impl fmt::Display for CycleType {
    /// Compact exponent form, e.g. `4 1`, `2^2 1`, `1^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == k).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{k}^{run}")?;
            } else {
                write!(f, "{k}")?;
            }
            i += run;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, each in descending order.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType(cur.clone()));
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Outcome of reducing `f` modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorPattern {
    CycleType(CycleType),
    /// `f mod l` has a repeated factor (`l` divides the discriminant).
    SquarefreeFailure,
}

/// Factor-degree pattern of `f mod ell`.
pub fn factor_degrees_mod_p(f: &IntPoly, ell: u64) -> Result<FactorPattern> {
    let lc = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    if lc.is_multiple_of(&BigInt::from(ell)) {
        return Err(Error::LeadingCoefficientVanishes { ell });
    }
    let g = ModPoly::from_int(f, ell);
    if !g.is_squarefree() {
        return Ok(FactorPattern::SquarefreeFailure);
    }
    let parts = g.factor_degrees().into_iter().map(|d| d as u32).collect();
    Ok(FactorPattern::CycleType(CycleType::new(parts)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMethod {
    /// Every element enumerated from a stabilizer chain.
    Enumerated,
    /// `A_p` and `S_p`: class sizes from the partition formula.
    Analytic,
}

/// Number of elements of each cycle type in one group.
#[derive(Clone, Debug)]
pub struct GroupCensus {
    pub group: TransitiveGroup,
    pub order: u128,
    pub counts: BTreeMap<CycleType, u128>,
    pub method: CensusMethod,
}

impl GroupCensus {
    pub fn compute(group: TransitiveGroup) -> GroupCensus {
        let p = group.degree();
        match group.generators() {
            Some(gens) => {
                let (order, raw): (u128, HashMap<Vec<u32>, u128>) = cycle_type_census(p, &gens);
                GroupCensus {
                    group,
                    order,
                    counts: raw.into_iter().map(|(k, v)| (CycleType(k), v)).collect(),
                    method: CensusMethod::Enumerated,
                }
            }
            None => {
                let even_only = matches!(group, TransitiveGroup::Alternating { .. });
                let counts: BTreeMap<CycleType, u128> = partitions(p)
                    .into_iter()
                    .filter(|t| !even_only || t.is_even())
                    .map(|t| {
                        let n = t.class_size_in_symmetric();
                        (t, n)
                    })
                    .collect();
                let full = factorial(p);
                GroupCensus {
                    group,
                    order: if even_only { full / 2 } else { full },
                    counts,
                    method: CensusMethod::Analytic,
                }
            }
        }
    }
}

fn census_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<GroupCensus>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<GroupCensus>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Census of every transitive group of degree `p` (cached per degree).
pub fn group_census(p: usize) -> Result<Arc<Vec<GroupCensus>>> {
    let groups = transitive_groups(p)?;
    let mut cache = census_cache().lock().unwrap();
    if let Some(c) = cache.get(&p) {
        return Ok(Arc::clone(c));
    }
    let census = Arc::new(groups.into_iter().map(GroupCensus::compute).collect::<Vec<_>>());
    cache.insert(p, Arc::clone(&census));
    Ok(census)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEntry {
    pub group: TransitiveGroup,
    pub order: u128,
    pub in_ap: bool,
    pub types: BTreeSet<CycleType>,
}

/// Cycle types realized by each transitive group of one prime degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCycleTable {
    pub p: usize,
    pub entries: Vec<GroupEntry>,
}

pub fn build_group_table(p: usize) -> Result<GroupCycleTable> {
    let census = group_census(p)?;
    let mut entries: Vec<GroupEntry> = census
        .iter()
        .map(|c| {
            let types: BTreeSet<CycleType> = c.counts.keys().cloned().collect();
            GroupEntry {
                group: c.group,
                order: c.order,
                in_ap: types.iter().all(CycleType::is_even),
                types,
            }
        })
        .collect();
    entries.sort_by_key(|e| e.order);
    Ok(GroupCycleTable { p, entries })
}

impl GroupCycleTable {
    pub fn entry(&self, group: &TransitiveGroup) -> Option<&GroupEntry> {
        self.entries.iter().find(|e| &e.group == group)
    }

    /// Line-oriented export: `degree <p>`, then per group
    /// `group <id> order <N> in_ap <0|1>` followed by `type <parts...>` lines.
    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.p);
        for e in &self.entries {
            s += &format!("group {} order {} in_ap {}\n", e.group, e.order, e.in_ap as u8);
            for t in &e.types {
                let parts: Vec<String> = t.parts().iter().map(u32::to_string).collect();
                s += &format!("type {}\n", parts.join(" "));
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<GroupCycleTable> {
        let err = |line: usize, msg: &str| Error::TableFormat {
            line,
            msg: msg.to_string(),
        };
        let mut p: Option<usize> = None;
        let mut entries: Vec<GroupEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let words: Vec<&str> = raw.split_whitespace().collect();
            match words.as_slice() {
                [] => continue,
                ["degree", d] if p.is_none() => {
                    p = Some(d.parse().map_err(|_| err(line_no, "bad degree"))?);
                }
                ["group", id, "order", n, "in_ap", flag] => {
                    let deg = p.ok_or_else(|| err(line_no, "group before degree"))?;
                    let group = TransitiveGroup::parse(deg, id)
                        .ok_or_else(|| err(line_no, &format!("unknown group id `{id}`")))?;
                    let order = n.parse().map_err(|_| err(line_no, "bad order"))?;
                    let in_ap = match *flag {
                        "0" => false,
                        "1" => true,
                        _ => return Err(err(line_no, "in_ap must be 0 or 1")),
                    };
                    entries.push(GroupEntry {
                        group,
                        order,
                        in_ap,
                        types: BTreeSet::new(),
                    });
                }
                ["type", parts @ ..] => {
                    let deg = p.ok_or_else(|| err(line_no, "type before degree"))?;
                    let entry = entries
                        .last_mut()
                        .ok_or_else(|| err(line_no, "type before any group"))?;
                    let parts: Vec<u32> = parts
                        .iter()
                        .map(|w| w.parse().ok().filter(|&x: &u32| x > 0))
                        .collect::<Option<_>>()
                        .ok_or_else(|| err(line_no, "bad cycle length"))?;
                    let t = CycleType::new(parts);
                    if t.degree() != deg {
                        return Err(err(line_no, "cycle lengths do not sum to the degree"));
                    }
                    entry.types.insert(t);
                }
                _ => return Err(err(line_no, &format!("unrecognized line `{raw}`"))),
            }
        }
        let p = p.ok_or_else(|| err(0, "missing degree line"))?;
        let table = GroupCycleTable { p, entries };
        table.check().map_err(|msg| err(0, &msg))?;
        Ok(table)
    }

    /// Structural invariants: identity and `p`-cycles present, `in_ap`
    /// consistent with the parities of the listed types.
    pub fn check(&self) -> std::result::Result<(), String> {
        for e in &self.entries {
            if !e.types.contains(&CycleType::identity(self.p)) {
                return Err(format!("{} lacks the identity", e.group));
            }
            if !e.types.contains(&CycleType::full_cycle(self.p)) {
                return Err(format!("{} lacks a {}-cycle", e.group, self.p));
            }
            if e.in_ap != e.types.iter().all(CycleType::is_even) {
                return Err(format!("{} has an inconsistent in_ap flag", e.group));
            }
        }
        Ok(())
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn read_file(path: &Path) -> Result<GroupCycleTable> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        Self::from_text(&text)
    }
}

/// The group found by reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupVerdict {
    Identified(TransitiveGroup),
    /// Several groups are consistent with all observations; `heuristic` is
    /// the smallest of them.
    CandidateSet {
        candidates: Vec<TransitiveGroup>,
        heuristic: TransitiveGroup,
    },
}

impl GroupVerdict {
    pub fn group(&self) -> TransitiveGroup {
        match self {
            GroupVerdict::Identified(g) => *g,
            GroupVerdict::CandidateSet { heuristic, .. } => *heuristic,
        }
    }

    pub fn is_heuristic(&self) -> bool {
        matches!(self, GroupVerdict::CandidateSet { .. })
    }
}

impl fmt::Display for GroupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupVerdict::Identified(g) => write!(f, "{g}"),
            GroupVerdict::CandidateSet { candidates, heuristic } => {
                let names: Vec<String> = candidates.iter().map(ToString::to_string).collect();
                write!(f, "{heuristic} (heuristic; candidates {})", names.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSample {
    pub prime: u64,
    pub cycle_type: CycleType,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum PrimeSource {
    /// 2, 3, 5, 7, ...
    #[default]
    Ascending,
    /// Exactly these primes, in the given order.
    List(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentifyOptions {
    /// Number of usable (squarefree) reductions to sample.
    pub prime_budget: usize,
    pub primes: PrimeSource,
}

impl Default for IdentifyOptions {
    fn default() -> Self {
        IdentifyOptions {
            prime_budget: DEFAULT_PRIME_BUDGET,
            primes: PrimeSource::Ascending,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub verdict: GroupVerdict,
    pub evidence: Vec<FrobeniusSample>,
    /// Primes skipped because they divide the leading coefficient or the
    /// discriminant.
    pub skipped: Vec<u64>,
}

/// Identifies the Galois group of an irreducible `f` of supported prime degree.
pub fn identify_group(f: &IntPoly, disc_is_square: bool, opts: &IdentifyOptions) -> Result<Identification> {
    let p = f.degree().ok_or(Error::ZeroPolynomial)?;
    let table = build_group_table(p)?;
    identify_group_with_table(f, &table, disc_is_square, opts)
}

pub fn identify_group_with_table(
    f: &IntPoly,
    table: &GroupCycleTable,
    disc_is_square: bool,
    opts: &IdentifyOptions,
) -> Result<Identification> {
    let p = f.degree().ok_or(Error::ZeroPolynomial)?;
    if p != table.p {
        return Err(Error::UnsupportedDegree(p));
    }
    // otherwise every prime would be skipped
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut alive: Vec<&GroupEntry> = table
        .entries
        .iter()
        .filter(|e| e.in_ap == disc_is_square)
        .collect();

    let primes: Box<dyn Iterator<Item = u64>> = match &opts.primes {
        PrimeSource::Ascending => Box::new(primes_from(2)),
        PrimeSource::List(list) => Box::new(list.clone().into_iter()),
    };
    let mut evidence = Vec::new();
    let mut skipped = Vec::new();
    for ell in primes {
        if evidence.len() >= opts.prime_budget {
            break;
        }
        let cycle_type = match factor_degrees_mod_p(f, ell) {
            Ok(FactorPattern::CycleType(t)) => t,
            Ok(FactorPattern::SquarefreeFailure) | Err(Error::LeadingCoefficientVanishes { .. }) => {
                skipped.push(ell);
                continue;
            }
            Err(e) => return Err(e),
        };
        alive.retain(|e| e.types.contains(&cycle_type));
        if alive.is_empty() {
            return Err(Error::InconsistentEvidence {
                prime: ell,
                cycle_type: cycle_type.to_string(),
            });
        }
        evidence.push(FrobeniusSample { prime: ell, cycle_type });
    }

    let verdict = if alive.len() == 1 {
        GroupVerdict::Identified(alive[0].group)
    } else {
        let smallest = alive.iter().min_by_key(|e| e.order).unwrap().group;
        GroupVerdict::CandidateSet {
            candidates: alive.iter().map(|e| e.group).collect(),
            heuristic: smallest,
        }
    };
    Ok(Identification {
        verdict,
        evidence,
        skipped,
    })
}
