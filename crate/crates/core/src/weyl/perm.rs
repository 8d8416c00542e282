//! Permutation groups given by generators: deterministic Schreier–Sims.
//!
//! Permutations act on the right: `x^(gh) = (x^g)^h`.

use std::collections::HashSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u16).collect())
    }

    /// From an image table; `None` unless it is a bijection.
    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(x, &y)| x != y as usize)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Indices into the chain's strong generators fixing the earlier base points.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `transversal[x] = u` with `point^u = x`; entries never change once set.
    transversal: Vec<Option<Perm>>,
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(point: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[point] = Some(Perm::identity(n));
        Self { point, gens: Vec::new(), orbit: vec![point], transversal, checked: HashSet::new() }
    }

    fn grow_orbit(&mut self, strong: &[Perm]) {
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for &gid in &self.gens {
                let g = &strong[gid];
                let y = g.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(g);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier–Sims on the generators. New base points are the first
    /// points moved by the residues that need them.
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = Self { degree, strong: Vec::new(), levels: Vec::new() };
        for g in generators {
            assert_eq!(g.degree(), degree, "generator of wrong degree");
            let (residue, level) = chain.sift_from(g, 0);
            if !residue.is_identity() {
                chain.add_strong(residue, level);
            }
        }
        chain
    }

    /// `g` fixes the base points before `level` and moves the one at `level`.
    fn add_strong(&mut self, g: Perm, level: usize) {
        if level == self.levels.len() {
            let point = g.first_moved().expect("nontrivial residue");
            self.levels.push(Level::new(point, self.degree));
        }
        let gid = self.strong.len();
        self.strong.push(g);
        for l in &mut self.levels[..=level] {
            l.gens.push(gid);
            l.grow_orbit(&self.strong);
        }
        for d in (0..=level).rev() {
            self.close(d);
        }
    }

    /// Sifts every unchecked Schreier generator of a level into the deeper chain.
    fn close(&mut self, level: usize) {
        loop {
            let mut progressed = false;
            let mut oi = 0;
            while oi < self.levels[level].orbit.len() {
                let mut gi = 0;
                while gi < self.levels[level].gens.len() {
                    let lv = &self.levels[level];
                    let (x, gid) = (lv.orbit[oi], lv.gens[gi]);
                    gi += 1;
                    if lv.checked.contains(&(x, gid)) {
                        continue;
                    }
                    let s = &self.strong[gid];
                    let u = lv.transversal[x].as_ref().unwrap();
                    let v = lv.transversal[s.image(x)].as_ref().unwrap();
                    let schreier = u.then(s).then(&v.inverse());
                    self.levels[level].checked.insert((x, gid));
                    progressed = true;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stop) = self.sift_from(&schreier, level + 1);
                    if !residue.is_identity() {
                        self.add_strong(residue, stop);
                    }
                }
                oi += 1;
            }
            if !progressed {
                break;
            }
        }
    }

    /// Strips `g` through the levels from `start`; returns the residue and
    /// the level at which sifting stopped.
    fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let level = &self.levels[i];
            let x = h.image(level.point);
            match &level.transversal[x] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }
}

/// Orbit of a point under the generators, in discovery order.
pub fn orbit(generators: &[Perm], start: usize) -> Vec<usize> {
    let n = generators.first().map_or(start + 1, Perm::degree);
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for g in generators {
            let y = g.image(out[i]);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}
