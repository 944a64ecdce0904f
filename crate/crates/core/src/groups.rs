//! The transitive permutation groups of prime degree `p <= 23` and
//! generating permutations for each of them.
//!
//! A transitive group of prime degree is either a subgroup of the affine
//! group `AGL(1, p)` (the cyclic group and the Frobenius groups `F_pn`) or
//! 2-transitive. The 2-transitive ones other than `A_p`, `S_p` occur only in
//! degrees 7, 11, 13, 17 and 23 in this range.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{mod_pow_u64, primitive_root};
use crate::perm::Perm;

pub const SUPPORTED_DEGREES: [usize; 7] = [5, 7, 11, 13, 17, 19, 23];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    /// `PSL(3,2) = PSL(2,7)`, order 168, on the points of the Fano plane.
    Psl3_2,
    /// `PSL(2,11)`, order 660, on the 11 points of its biplane.
    Psl2_11,
    /// Mathieu group `M11`, order 7920.
    M11,
    /// `PSL(3,3)`, order 5616, on the projective plane of order 3.
    Psl3_3,
    /// `PSL(2,16)`, order 4080, on the projective line over `F_16`.
    Psl2_16,
    /// `PSL(2,16):2`, order 8160.
    Psl2_16Ext2,
    /// `PGammaL(2,16) = PSL(2,16):4`, order 16320.
    PGammaL2_16,
    /// Mathieu group `M23`, order 10200960.
    M23,
}

impl Exceptional {
    pub const ALL: [Exceptional; 8] = [
        Exceptional::Psl3_2,
        Exceptional::Psl2_11,
        Exceptional::M11,
        Exceptional::Psl3_3,
        Exceptional::Psl2_16,
        Exceptional::Psl2_16Ext2,
        Exceptional::PGammaL2_16,
        Exceptional::M23,
    ];

    pub fn degree(self) -> usize {
        match self {
            Exceptional::Psl3_2 => 7,
            Exceptional::Psl2_11 | Exceptional::M11 => 11,
            Exceptional::Psl3_3 => 13,
            Exceptional::Psl2_16 | Exceptional::Psl2_16Ext2 | Exceptional::PGammaL2_16 => 17,
            Exceptional::M23 => 23,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::Psl3_2 => "PSL(3,2)",
            Exceptional::Psl2_11 => "PSL(2,11)",
            Exceptional::M11 => "M11",
            Exceptional::Psl3_3 => "PSL(3,3)",
            Exceptional::Psl2_16 => "PSL(2,16)",
            Exceptional::Psl2_16Ext2 => "PSL(2,16):2",
            Exceptional::PGammaL2_16 => "PGammaL(2,16)",
            Exceptional::M23 => "M23",
        }
    }

    pub fn generators(self) -> Vec<Perm> {
        match self {
            Exceptional::Psl3_2 => projective_plane_transvections(2),
            Exceptional::Psl3_3 => projective_plane_transvections(3),
            Exceptional::Psl2_11 => biplane_11_generators(),
            Exceptional::M11 => vec![
                Perm::from_cycles(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]),
                Perm::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]),
            ],
            Exceptional::Psl2_16 => projective_line_16(0),
            Exceptional::Psl2_16Ext2 => projective_line_16(2),
            Exceptional::PGammaL2_16 => projective_line_16(1),
            Exceptional::M23 => vec![
                Perm::from_cycles(23, &[&(1..=23).collect::<Vec<_>>()]),
                Perm::from_cycles(
                    23,
                    &[
                        &[3, 17, 10, 7, 9],
                        &[4, 13, 14, 19, 5],
                        &[8, 18, 11, 12, 23],
                        &[15, 20, 22, 21, 16],
                    ],
                ),
            ],
        }
    }
}

/// A transitive permutation group of prime degree, up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransitiveGroup {
    Cyclic { p: usize },
    /// `F_pn = C_p x| C_n` with `n | p - 1`, `n > 1`; `n = 2` is dihedral.
    Frobenius { p: usize, n: usize },
    Exceptional(Exceptional),
    Alternating { p: usize },
    Symmetric { p: usize },
}

impl TransitiveGroup {
    pub fn degree(&self) -> usize {
        match *self {
            TransitiveGroup::Cyclic { p }
            | TransitiveGroup::Frobenius { p, .. }
            | TransitiveGroup::Alternating { p }
            | TransitiveGroup::Symmetric { p } => p,
            TransitiveGroup::Exceptional(e) => e.degree(),
        }
    }

    /// Solvable exactly when inside `AGL(1, p)`.
    pub fn is_solvable(&self) -> bool {
        matches!(self, TransitiveGroup::Cyclic { .. } | TransitiveGroup::Frobenius { .. })
    }

    /// Parses the names produced by `Display` for degree `p`.
    pub fn parse(p: usize, id: &str) -> Option<TransitiveGroup> {
        if let Some(e) = Exceptional::ALL.iter().find(|e| e.name() == id && e.degree() == p) {
            return Some(TransitiveGroup::Exceptional(*e));
        }
        let (head, num) = id.split_at(1.min(id.len()));
        let num: usize = num.parse().ok()?;
        let group = match head {
            "C" if num == p => TransitiveGroup::Cyclic { p },
            "A" if num == p => TransitiveGroup::Alternating { p },
            "S" if num == p => TransitiveGroup::Symmetric { p },
            "D" if num == 2 * p => TransitiveGroup::Frobenius { p, n: 2 },
            "F" if num % p == 0 && num / p > 2 && (p - 1) % (num / p) == 0 => {
                TransitiveGroup::Frobenius { p, n: num / p }
            }
            _ => return None,
        };
        Some(group)
    }

    /// Generating permutations; `None` for `A_p` and `S_p`, which are handled
    /// analytically.
    pub fn generators(&self) -> Option<Vec<Perm>> {
        match *self {
            TransitiveGroup::Cyclic { p } => Some(vec![Perm::from_fn(p, |x| (x + 1) % p)]),
            TransitiveGroup::Frobenius { p, n } => {
                let g = primitive_root(p as u64).expect("prime degree");
                let a = mod_pow_u64(g, ((p - 1) / n) as u64, p as u64) as usize;
                Some(vec![
                    Perm::from_fn(p, |x| (x + 1) % p),
                    Perm::from_fn(p, |x| (a * x) % p),
                ])
            }
            TransitiveGroup::Exceptional(e) => Some(e.generators()),
            TransitiveGroup::Alternating { .. } | TransitiveGroup::Symmetric { .. } => None,
        }
    }
}

impl fmt::Display for TransitiveGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TransitiveGroup::Cyclic { p } => write!(f, "C{p}"),
            TransitiveGroup::Frobenius { p, n: 2 } => write!(f, "D{}", 2 * p),
            TransitiveGroup::Frobenius { p, n } => write!(f, "F{}", p * n),
            TransitiveGroup::Exceptional(e) => f.write_str(e.name()),
            TransitiveGroup::Alternating { p } => write!(f, "A{p}"),
            TransitiveGroup::Symmetric { p } => write!(f, "S{p}"),
        }
    }
}

/// Every transitive group of degree `p`, smallest first by construction
/// order (cyclic, Frobenius by `n`, exceptional, `A_p`, `S_p`).
pub fn transitive_groups(p: usize) -> Result<Vec<TransitiveGroup>> {
    if !SUPPORTED_DEGREES.contains(&p) {
        return Err(Error::UnsupportedDegree(p));
    }
    let mut out = vec![TransitiveGroup::Cyclic { p }];
    out.extend(
        (2..p)
            .filter(|n| (p - 1) % n == 0)
            .map(|n| TransitiveGroup::Frobenius { p, n }),
    );
    out.extend(
        Exceptional::ALL
            .iter()
            .filter(|e| e.degree() == p)
            .map(|&e| TransitiveGroup::Exceptional(e)),
    );
    out.push(TransitiveGroup::Alternating { p });
    out.push(TransitiveGroup::Symmetric { p });
    Ok(out)
}

/// Elementary transvections of `SL(3, q)` acting on the `q^2 + q + 1` points
/// of the projective plane over the prime field `F_q`.
fn projective_plane_transvections(q: usize) -> Vec<Perm> {
    let normalize = |v: [usize; 3]| -> [usize; 3] {
        let lead = *v.iter().find(|&&c| c != 0).unwrap();
        let inv = (1..q).find(|&i| i * lead % q == 1).unwrap();
        v.map(|c| c * inv % q)
    };
    let mut points = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v != [0, 0, 0] && normalize(v) == v {
                    points.push(v);
                }
            }
        }
    }
    let index = |v: [usize; 3]| points.iter().position(|&w| w == normalize(v)).unwrap();
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            gens.push(Perm::from_fn(points.len(), |k| {
                let mut v = points[k];
                v[i] = (v[i] + v[j]) % q;
                index(v)
            }));
        }
    }
    gens
}

/// Automorphisms of the `(11, 5, 2)` biplane with blocks the translates of
/// the quadratic residues `{1, 3, 4, 5, 9}`: translations, a multiplier, and
/// every automorphism fixing 0 and 1 (found by exhaustive search).
fn biplane_11_generators() -> Vec<Perm> {
    const N: usize = 11;
    let blocks: HashSet<u16> = (0..N)
        .map(|i| [1, 3, 4, 5, 9].iter().fold(0u16, |m, d| m | 1 << ((d + i) % N)))
        .collect();
    let block_list: Vec<u16> = blocks.iter().copied().collect();
    let mut gens = vec![
        Perm::from_fn(N, |x| (x + 1) % N),
        Perm::from_fn(N, |x| 3 * x % N),
    ];

    fn search(
        img: &mut [usize; N],
        used: u16,
        next: usize,
        blocks: &HashSet<u16>,
        block_list: &[u16],
        out: &mut Vec<Perm>,
    ) {
        // Prune: every block whose points are all assigned must map to a block.
        let assigned: u16 = (1 << next) - 1;
        for &b in block_list {
            if b & !assigned == 0 {
                let image = (0..N).filter(|i| b & (1 << i) != 0).fold(0u16, |m, i| m | 1 << img[i]);
                if !blocks.contains(&image) {
                    return;
                }
            }
        }
        if next == N {
            out.push(Perm::from_images(img.to_vec()));
            return;
        }
        for target in 0..N {
            if used & (1 << target) == 0 {
                img[next] = target;
                search(img, used | 1 << target, next + 1, blocks, block_list, out);
            }
        }
    }

    let mut img = [0usize; N];
    img[0] = 0;
    img[1] = 1;
    let mut found = Vec::new();
    search(&mut img, 0b11, 2, &blocks, &block_list, &mut found);
    gens.extend(found.into_iter().filter(|g| !g.is_identity()));
    gens
}

/// `PSL(2,16)` on `F_16 u {inf}` extended by the field automorphism
/// `x -> x^(2^k)` (`k = 0` adds nothing, `k = 2` gives index 2, `k = 1`
/// gives the full semilinear group).
fn projective_line_16(frobenius_power: u32) -> Vec<Perm> {
    const INF: usize = 16;
    // F_16 = F_2[t] / (t^4 + t + 1)
    fn mul(a: usize, b: usize) -> usize {
        let mut r = 0usize;
        for i in 0..4 {
            if b & (1 << i) != 0 {
                r ^= a << i;
            }
        }
        for bit in (4..8).rev() {
            if r & (1 << bit) != 0 {
                r ^= 0b10011 << (bit - 4);
            }
        }
        r
    }
    let inv = |a: usize| (1..16).find(|&b| mul(a, b) == 1).unwrap();

    let mut gens = vec![
        Perm::from_fn(17, |x| if x == INF { INF } else { x ^ 1 }),
        Perm::from_fn(17, |x| if x == INF { INF } else { mul(x, 2) }),
        Perm::from_fn(17, |x| match x {
            INF => 0,
            0 => INF,
            _ => inv(x),
        }),
    ];
    if frobenius_power > 0 {
        gens.push(Perm::from_fn(17, |x| {
            if x == INF {
                return INF;
            }
            let mut y = x;
            for _ in 0..frobenius_power {
                y = mul(y, y);
            }
            y
        }));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::StabChain;

    fn order(g: &TransitiveGroup) -> u128 {
        StabChain::new(g.degree(), &g.generators().unwrap()).order()
    }

    #[test]
    fn exceptional_orders() {
        let expect = [
            (Exceptional::Psl3_2, 168),
            (Exceptional::Psl2_11, 660),
            (Exceptional::M11, 7920),
            (Exceptional::Psl3_3, 5616),
            (Exceptional::Psl2_16, 4080),
            (Exceptional::Psl2_16Ext2, 8160),
            (Exceptional::PGammaL2_16, 16320),
            (Exceptional::M23, 10200960),
        ];
        for (e, n) in expect {
            assert_eq!(order(&TransitiveGroup::Exceptional(e)), n, "{}", e.name());
        }
    }

    #[test]
    fn affine_orders() {
        for p in SUPPORTED_DEGREES {
            for g in transitive_groups(p).unwrap() {
                match g {
                    TransitiveGroup::Cyclic { p } => assert_eq!(order(&g), p as u128),
                    TransitiveGroup::Frobenius { p, n } => assert_eq!(order(&g), (p * n) as u128),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for p in SUPPORTED_DEGREES {
            for g in transitive_groups(p).unwrap() {
                assert_eq!(TransitiveGroup::parse(p, &g.to_string()), Some(g));
            }
        }
        assert_eq!(TransitiveGroup::parse(5, "F15"), None);
        assert_eq!(TransitiveGroup::parse(5, "M11"), None);
        assert_eq!(TransitiveGroup::parse(5, ""), None);
    }

    #[test]
    fn group_counts_per_degree() {
        let counts: Vec<usize> = SUPPORTED_DEGREES
            .iter()
            .map(|&p| transitive_groups(p).unwrap().len())
            .collect();
        // 5: C,D,F20,A,S  7: C,D,F21,F42,L(3,2),A,S  ...
        assert_eq!(counts, vec![5, 7, 8, 9, 10, 8, 7]);
        assert_eq!(transitive_groups(29), Err(Error::UnsupportedDegree(29)));
    }
}
