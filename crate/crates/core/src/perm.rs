//! Permutations of small degree and stabilizer chains.
//!
//! Permutations act on the right: `(g * h)(x) = h(g(x))`. Points are
//! `0..degree` with `degree <= 32`.

use std::collections::HashMap;

/// Images of the points `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= 32, "degree {degree} too large");
        Perm {
            img: (0..degree as u8).collect(),
        }
    }

    /// From an image table; panics if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Perm {
            img: images.into_iter().map(|i| i as u8).collect(),
        }
    }

    /// From disjoint cycles written with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Perm {
        let mut img: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                img[a - 1] = b - 1;
            }
        }
        Perm::from_images(img)
    }

    /// From a function on points.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Perm {
        Perm::from_images((0..degree).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().position(|(i, &x)| i != x as usize)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    /// Cycle lengths in descending order (fixed points included).
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let mut counts = [0u8; 33];
        cycle_counts(&self.img, &mut counts);
        counts_to_parts(&counts)
    }
}

/// `counts[k]` = number of cycles of length `k`.
fn cycle_counts(img: &[u8], counts: &mut [u8; 33]) {
    counts.fill(0);
    let mut seen = 0u32;
    for start in 0..img.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen & (1 << x) == 0 {
            seen |= 1 << x;
            x = img[x] as usize;
            len += 1;
        }
        counts[len] += 1;
    }
}

fn counts_to_parts(counts: &[u8; 33]) -> Vec<u32> {
    let mut parts = Vec::new();
    for len in (1..33).rev() {
        for _ in 0..counts[len] {
            parts.push(len as u32);
        }
    }
    parts
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[b]` maps the base point to `b`, for `b` in the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set built with the deterministic
/// Schreier-Sims algorithm.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree);
            if !g.is_identity() {
                chain.extend(0, g.clone());
            }
        }
        chain
    }

    /// Residue of `g` after sifting from level `from`; identity iff member.
    fn sift(&self, from: usize, g: &Perm) -> Perm {
        let mut g = g.clone();
        for level in &self.levels[from..] {
            let beta = g.image(level.base);
            match &level.transversal[beta] {
                None => return g,
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        g
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.sift(0, g).is_identity()
    }

    fn extend(&mut self, i: usize, g: Perm) {
        if self.sift(i, &g).is_identity() {
            return;
        }
        if i == self.levels.len() {
            let base = g.first_moved().expect("non-identity generator");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.levels[i].gens.push(g);
        self.rebuild_orbit(i);

        let level = &self.levels[i];
        let mut schreier = Vec::new();
        for &beta in &level.orbit {
            let u = level.transversal[beta].as_ref().unwrap();
            for s in &level.gens {
                let gamma = s.image(beta);
                let v = level.transversal[gamma].as_ref().unwrap();
                let h = u.then(s).then(&v.inverse());
                if !h.is_identity() {
                    schreier.push(h);
                }
            }
        }
        for h in schreier {
            self.extend(i + 1, h);
        }
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let n = self.degree;
        let level = &mut self.levels[i];
        let mut transversal: Vec<Option<Perm>> = vec![None; n];
        transversal[level.base] = Some(Perm::identity(n));
        let mut orbit = vec![level.base];
        let mut head = 0;
        while head < orbit.len() {
            let beta = orbit[head];
            head += 1;
            for s in &level.gens {
                let gamma = s.image(beta);
                if transversal[gamma].is_none() {
                    let u = transversal[beta].as_ref().unwrap().then(s);
                    transversal[gamma] = Some(u);
                    orbit.push(gamma);
                }
            }
        }
        level.transversal = transversal;
        level.orbit = orbit;
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Visits the cycle-length multiplicities of every group element exactly
    /// once (`counts[k]` = number of `k`-cycles).
    pub fn for_each_cycle_counts(&self, mut visit: impl FnMut(&[u8; 33])) {
        let n = self.degree;
        let reps: Vec<Vec<&Perm>> = self
            .levels
            .iter()
            .map(|l| l.orbit.iter().map(|&b| l.transversal[b].as_ref().unwrap()).collect())
            .collect();
        let k = reps.len();
        // bufs[d + 1] = u_d * bufs[d]; the full element u_{k-1} * ... * u_0
        // runs through the group once as the odometer `idx` turns.
        let mut bufs: Vec<Vec<u8>> = vec![(0..n as u8).collect(); k + 1];
        let mut idx = vec![0usize; k];
        let mut counts = [0u8; 33];
        let compose = |bufs: &mut [Vec<u8>], d: usize, u: &Perm| {
            let (head, tail) = bufs.split_at_mut(d + 1);
            for (x, o) in tail[0].iter_mut().enumerate() {
                *o = head[d][u.img[x] as usize];
            }
        };
        for d in 0..k {
            compose(&mut bufs, d, reps[d][0]);
        }
        loop {
            cycle_counts(&bufs[k], &mut counts);
            visit(&counts);
            let mut d = k;
            loop {
                if d == 0 {
                    return;
                }
                d -= 1;
                idx[d] += 1;
                if idx[d] < reps[d].len() {
                    break;
                }
                idx[d] = 0;
            }
            for e in d..k {
                compose(&mut bufs, e, reps[e][idx[e]]);
            }
        }
    }
}

/// Cycle-type census of the group generated by `gens`: map from cycle
/// lengths (descending) to the number of elements with that shape.
pub fn cycle_type_census(degree: usize, gens: &[Perm]) -> (u128, HashMap<Vec<u32>, u128>) {
    let chain = StabChain::new(degree, gens);
    let mut raw: HashMap<[u8; 33], u128> = HashMap::new();
    chain.for_each_cycle_counts(|c| *raw.entry(*c).or_insert(0) += 1);
    let census = raw
        .into_iter()
        .map(|(c, k)| (counts_to_parts(&c), k))
        .collect();
    (chain.order(), census)
}
