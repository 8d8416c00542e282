//! The lattice H₇ = ⟨e₀,…,e₇⟩ with form diag(1,−1,…,−1), its E₇ roots and
//! 56 exceptional lines, and the Weyl group W(E₇) acting on them.
//!
//! Lattice indices follow the classical labelling 1…8 (with e₈ = Σeᵢ − 2e₀);
//! octad point `i` (0-based) corresponds to lattice index `i + 1`.

pub mod perm;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::linalg;
use crate::exact::{Field, Rationals};
use crate::{Error, Result};
use perm::{Perm, StabilizerChain};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector(pub [i64; 8]);

impl LatticeVector {
    pub const ZERO: Self = Self([0; 8]);

    /// Basis vector eᵢ for i ≤ 7, and e₈ = Σᵢ eᵢ − 2e₀.
    pub fn e(i: usize) -> Self {
        assert!(i <= 8, "basis index {i} out of range");
        if i == 8 {
            return Self([-2, 1, 1, 1, 1, 1, 1, 1]);
        }
        let mut c = [0; 8];
        c[i] = 1;
        Self(c)
    }

    /// The canonical class k = −3e₀ + Σeᵢ; −k is anticanonical.
    pub fn k() -> Self {
        Self([-3, 1, 1, 1, 1, 1, 1, 1])
    }

    pub fn coeffs(&self) -> &[i64; 8] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.0[0] * other.0[0] - (1..8).map(|i| self.0[i] * other.0[i]).sum::<i64>()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.map(|c| -c))
    }

    pub fn scale(&self, s: i64) -> Self {
        Self(self.0.map(|c| s * c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Positive roots: αᵢⱼ = eᵢ − eⱼ (1 ≤ i < j ≤ 8) and αᵢⱼₖ = e₀ − eᵢ − eⱼ − eₖ (1 ≤ i < j < k ≤ 7).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootLabel {
    Pair(u8, u8),
    Triple(u8, u8, u8),
}

/// Lines: lᵢⱼ = eᵢ + eⱼ − e₈ and l′ᵢⱼ = e₀ − eᵢ − eⱼ, 1 ≤ i < j ≤ 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LineLabel {
    L(u8, u8),
    LPrime(u8, u8),
}

impl LineLabel {
    pub fn indices(&self) -> (u8, u8) {
        match *self {
            LineLabel::L(i, j) | LineLabel::LPrime(i, j) => (i, j),
        }
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLabel::Pair(i, j) => write!(f, "a{i}{j}"),
            RootLabel::Triple(i, j, k) => write!(f, "a{i}{j}{k}"),
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::L(i, j) => write!(f, "l{i}{j}"),
            LineLabel::LPrime(i, j) => write!(f, "l'{i}{j}"),
        }
    }
}

fn ordered(a: u8, b: u8) -> (u8, u8) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn root_vector(label: RootLabel) -> LatticeVector {
    match label {
        RootLabel::Pair(i, j) => LatticeVector::e(i as usize).sub(&LatticeVector::e(j as usize)),
        RootLabel::Triple(i, j, k) => LatticeVector::e(0)
            .sub(&LatticeVector::e(i as usize))
            .sub(&LatticeVector::e(j as usize))
            .sub(&LatticeVector::e(k as usize)),
    }
}

pub fn line_vector(label: LineLabel) -> LatticeVector {
    match label {
        LineLabel::L(i, j) => LatticeVector::e(i as usize).add(&LatticeVector::e(j as usize)).sub(&LatticeVector::e(8)),
        LineLabel::LPrime(i, j) => {
            LatticeVector::e(0).sub(&LatticeVector::e(i as usize)).sub(&LatticeVector::e(j as usize))
        }
    }
}

pub fn pair_labels() -> impl Iterator<Item = (u8, u8)> {
    (1..=8u8).flat_map(|i| (i + 1..=8).map(move |j| (i, j)))
}

pub fn triple_labels() -> impl Iterator<Item = (u8, u8, u8)> {
    (1..=7u8).flat_map(|i| (i + 1..=7).flat_map(move |j| (j + 1..=7).map(move |k| (i, j, k))))
}

/// The 63 positive roots, pairs first.
pub fn positive_roots() -> Vec<(RootLabel, LatticeVector)> {
    pair_labels()
        .map(|(i, j)| RootLabel::Pair(i, j))
        .chain(triple_labels().map(|(i, j, k)| RootLabel::Triple(i, j, k)))
        .map(|l| (l, root_vector(l)))
        .collect()
}

/// The 56 lines, all lᵢⱼ then all l′ᵢⱼ.
pub fn lines() -> Vec<(LineLabel, LatticeVector)> {
    pair_labels()
        .map(|(i, j)| LineLabel::L(i, j))
        .chain(pair_labels().map(|(i, j)| LineLabel::LPrime(i, j)))
        .map(|l| (l, line_vector(l)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationKind {
    PositiveRoots,
    Lines,
}

pub fn enumerate(kind: EnumerationKind) -> Vec<LatticeVector> {
    match kind {
        EnumerationKind::PositiveRoots => positive_roots().into_iter().map(|(_, v)| v).collect(),
        EnumerationKind::Lines => lines().into_iter().map(|(_, v)| v).collect(),
    }
}

/// All 126 roots: the positive ones followed by their negatives.
pub fn all_roots() -> &'static [LatticeVector] {
    static ROOTS: OnceLock<Vec<LatticeVector>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let pos = enumerate(EnumerationKind::PositiveRoots);
        let neg: Vec<_> = pos.iter().map(LatticeVector::neg).collect();
        pos.into_iter().chain(neg).collect()
    })
}

fn root_index() -> &'static HashMap<LatticeVector, usize> {
    static INDEX: OnceLock<HashMap<LatticeVector, usize>> = OnceLock::new();
    INDEX.get_or_init(|| all_roots().iter().enumerate().map(|(i, v)| (*v, i)).collect())
}

pub fn line_label_of(v: &LatticeVector) -> Option<LineLabel> {
    static INDEX: OnceLock<HashMap<LatticeVector, LineLabel>> = OnceLock::new();
    INDEX.get_or_init(|| lines().into_iter().map(|(l, v)| (v, l)).collect()).get(v).copied()
}

/// s_α(v) = v + (v,α)α, the reflection in a root ((α,α) = −2).
pub fn reflect(alpha: &LatticeVector, v: &LatticeVector) -> Result<LatticeVector> {
    if alpha.dot(alpha) != -2 {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    Ok(v.add(&alpha.scale(v.dot(alpha))))
}

/// An element of O(H₇) as an integer matrix acting on coefficient columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement(pub [[i64; 8]; 8]);

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.0)
    }
}

impl WeylElement {
    pub fn identity() -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| (i == j) as i64)))
    }

    pub fn reflection(alpha: &LatticeVector) -> Result<Self> {
        let cols: Vec<LatticeVector> = (0..8).map(|i| reflect(alpha, &LatticeVector::e(i))).collect::<Result<_>>()?;
        Ok(Self::from_columns(&cols))
    }

    /// w₀(v) = −v + (v,k)k: −1 on k^⊥ and the identity on k.
    pub fn w0() -> Self {
        let k = LatticeVector::k();
        let cols: Vec<LatticeVector> = (0..8)
            .map(|i| {
                let e = LatticeVector::e(i);
                e.neg().add(&k.scale(e.dot(&k)))
            })
            .collect();
        Self::from_columns(&cols)
    }

    fn from_columns(cols: &[LatticeVector]) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i])))
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector(std::array::from_fn(|i| self.0[i][j]))
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector(std::array::from_fn(|i| (0..8).map(|j| self.0[i][j] * v.0[j]).sum()))
    }

    /// Matrix product: `self.mul(other)` applies `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| (0..8).map(|t| self.0[i][t] * other.0[t][j]).sum())))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn preserves_form(&self) -> bool {
        (0..8).all(|i| {
            (0..8).all(|j| self.column(i).dot(&self.column(j)) == LatticeVector::e(i).dot(&LatticeVector::e(j)))
        })
    }

    pub fn fixes_k(&self) -> bool {
        self.apply(&LatticeVector::k()) == LatticeVector::k()
    }

    /// Image table on the 126 roots; `None` if some root leaves the root system.
    pub fn root_permutation(&self) -> Option<Perm> {
        let idx = root_index();
        let images = all_roots().iter().map(|r| idx.get(&self.apply(r)).map(|&i| i as u16)).collect::<Option<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

/// The 63 reflections generating W(E₇), in positive-root order.
pub fn weyl_generators() -> Vec<(RootLabel, WeylElement)> {
    positive_roots().into_iter().map(|(l, a)| (l, WeylElement::reflection(&a).unwrap())).collect()
}

/// The 28 reflections sᵢⱼ generating Σ₈.
pub fn sym8_generators() -> Vec<(RootLabel, WeylElement)> {
    weyl_generators().into_iter().filter(|(l, _)| matches!(l, RootLabel::Pair(..))).collect()
}

pub fn stabilizer_chain(generators: &[WeylElement]) -> Result<StabilizerChain> {
    let perms = generators
        .iter()
        .map(|g| g.root_permutation().ok_or_else(|| Error::Precondition("generator does not permute the roots".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilizerChain::new(all_roots().len(), &perms))
}

pub fn group_order(generators: &[WeylElement]) -> Result<u128> {
    Ok(stabilizer_chain(generators)?.order())
}

fn full_chain() -> &'static StabilizerChain {
    static CHAIN: OnceLock<StabilizerChain> = OnceLock::new();
    CHAIN.get_or_init(|| {
        let gens: Vec<_> = weyl_generators().into_iter().map(|(_, g)| g).collect();
        stabilizer_chain(&gens).expect("reflections permute the roots")
    })
}

pub fn weyl_order() -> u128 {
    full_chain().order()
}

pub fn is_weyl_element(g: &WeylElement) -> bool {
    g.root_permutation().is_some_and(|p| full_chain().contains(&p)) && g.fixes_k()
}

/// [W(E₇) : Σ₈] from the two group orders.
pub fn sym8_index() -> Result<u128> {
    let sym: Vec<_> = sym8_generators().into_iter().map(|(_, g)| g).collect();
    Ok(weyl_order() / group_order(&sym)?)
}

/// Simple roots α₁₂,…,α₆₇ (a chain) and α₁₂₃ (attached to α₃₄).
pub fn simple_roots() -> [LatticeVector; 7] {
    [
        root_vector(RootLabel::Pair(1, 2)),
        root_vector(RootLabel::Pair(2, 3)),
        root_vector(RootLabel::Pair(3, 4)),
        root_vector(RootLabel::Pair(4, 5)),
        root_vector(RootLabel::Pair(5, 6)),
        root_vector(RootLabel::Pair(6, 7)),
        root_vector(RootLabel::Triple(1, 2, 3)),
    ]
}

/// Central elements of W(E₇).
///
/// A central z satisfies z s_α z⁻¹ = s_{zα} = s_α, so z(α) = ±α on every root.
/// The candidates are the 2⁷ sign patterns on the simple roots, extended by
/// z(k) = k; those that are integral, lie in W and commute with all
/// generators are kept.
pub fn center_elements() -> Vec<WeylElement> {
    let q = Rationals;
    let mut basis: Vec<LatticeVector> = simple_roots().to_vec();
    basis.push(LatticeVector::k());
    let b: Vec<Vec<BigRational>> =
        (0..8).map(|i| (0..8).map(|j| q.from_i64(basis[j].0[i])).collect()).collect();
    let b_inv = linalg::inverse(&q, &b).expect("simple roots and k span");
    let gens: Vec<Perm> = weyl_generators().iter().map(|(_, g)| g.root_permutation().unwrap()).collect();
    let mut out = Vec::new();
    for mask in 0u32..128 {
        let signed: Vec<Vec<BigRational>> = (0..8)
            .map(|i| {
                (0..8)
                    .map(|j| {
                        let s = if j < 7 && mask >> j & 1 == 1 { -1 } else { 1 };
                        q.from_i64(s * basis[j].0[i])
                    })
                    .collect()
            })
            .collect();
        let m: Vec<Vec<BigRational>> = (0..8)
            .map(|i| (0..8).map(|j| q.sum(&(0..8).map(|t| &signed[i][t] * &b_inv[t][j]).collect::<Vec<_>>())).collect())
            .collect();
        if m.iter().flatten().any(|x| !x.denom().is_one()) {
            continue;
        }
        let z = WeylElement(std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].to_integer().to_i64().unwrap())));
        let Some(p) = z.root_permutation() else { continue };
        if full_chain().contains(&p) && gens.iter().all(|g| g.then(&p) == p.then(g)) {
            out.push(z);
        }
    }
    out.sort();
    out
}

/// Which of the two action rules for sᵢⱼₖ on lines to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleVariant {
    /// |{i,j,k,8} ∩ {p,q}| = 1 fixes the line; otherwise l ↔ l′ on the complementary pair.
    Classical,
    /// The two cases exchanged; a control that must disagree with the formula.
    Swapped,
}

/// sᵢⱼₖ applied to a line by the combinatorial rule.
pub fn triple_rule(ijk: (u8, u8, u8), line: LineLabel, variant: RuleVariant) -> LineLabel {
    let s: BTreeSet<u8> = [ijk.0, ijk.1, ijk.2, 8].into_iter().collect();
    let (p, q) = line.indices();
    let meet = s.contains(&p) as usize + s.contains(&q) as usize;
    let fixed = match variant {
        RuleVariant::Classical => meet == 1,
        RuleVariant::Swapped => meet != 1,
    };
    if fixed {
        return line;
    }
    // {p,q,s,t} is {i,j,k,8} or its complement
    let block: BTreeSet<u8> = if s.contains(&p) { s } else { (1..=8).filter(|x| !s.contains(x)).collect() };
    let rest: Vec<u8> = block.into_iter().filter(|&x| x != p && x != q).collect();
    let (a, b) = if rest.len() == 2 { (rest[0], rest[1]) } else { (p, q) };
    match line {
        LineLabel::L(..) => LineLabel::LPrime(a, b),
        LineLabel::LPrime(..) => LineLabel::L(a, b),
    }
}

/// sᵢⱼ applied to a line: the transposition (ij) on indices.
pub fn transposition_rule(ij: (u8, u8), line: LineLabel) -> LineLabel {
    let swap = |x: u8| if x == ij.0 { ij.1 } else if x == ij.1 { ij.0 } else { x };
    let (p, q) = line.indices();
    let (a, b) = ordered(swap(p), swap(q));
    match line {
        LineLabel::L(..) => LineLabel::L(a, b),
        LineLabel::LPrime(..) => LineLabel::LPrime(a, b),
    }
}

pub fn rule_table_crosscheck_with(variant: RuleVariant) -> bool {
    triple_labels().all(|ijk| {
        let alpha = root_vector(RootLabel::Triple(ijk.0, ijk.1, ijk.2));
        lines().into_iter().all(|(label, v)| {
            let image = reflect(&alpha, &v).unwrap();
            line_label_of(&image) == Some(triple_rule(ijk, label, variant))
        })
    })
}

/// Does the reflection formula reproduce the combinatorial rule on all
/// 35 × 56 (sᵢⱼₖ, line) pairs?
pub fn rule_table_crosscheck() -> bool {
    rule_table_crosscheck_with(RuleVariant::Classical)
}

/// φ given by the images of e₀,…,e₇.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LedgerMarking {
    images: [LatticeVector; 8],
}

impl LedgerMarking {
    pub fn new(images: [LatticeVector; 8]) -> Result<Self> {
        for i in 0..8 {
            for j in 0..8 {
                let want = LatticeVector::e(i).dot(&LatticeVector::e(j));
                if images[i].dot(&images[j]) != want {
                    return Err(Error::InvalidMarking(format!("Gram entry ({i},{j}) is not {want}")));
                }
            }
        }
        let m = Self { images };
        if m.apply(&LatticeVector::k()) != LatticeVector::k() {
            return Err(Error::InvalidMarking("k is not fixed".into()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self { images: std::array::from_fn(LatticeVector::e) }
    }

    pub fn images(&self) -> &[LatticeVector; 8] {
        &self.images
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        (0..8).fold(LatticeVector::ZERO, |acc, i| acc.add(&self.images[i].scale(v.0[i])))
    }

    /// w·φ = w ∘ φ.
    pub fn transformed(&self, w: &WeylElement) -> Self {
        Self { images: self.images.map(|v| w.apply(&v)) }
    }

    /// φ ∘ σ: relabelling the source by an element of Σ₈ (or any element of W).
    pub fn relabeled(&self, sigma: &WeylElement) -> Self {
        Self { images: std::array::from_fn(|i| self.apply(&sigma.column(i))) }
    }

    /// φ(lᵢⱼ), 1 ≤ i < j ≤ 8.
    pub fn ledger_classes(&self) -> Vec<LatticeVector> {
        pair_labels().map(|(i, j)| self.apply(&line_vector(LineLabel::L(i, j)))).collect()
    }

    pub fn dual_classes(&self) -> Vec<LatticeVector> {
        pair_labels().map(|(i, j)| self.apply(&line_vector(LineLabel::LPrime(i, j)))).collect()
    }

    /// The sorted ledger classes. Relabelling by Σ₈ permutes the classes, so
    /// every relabelling has the same sorted tuple; equality characterises
    /// the Σ₈-coset because Σ₈ is the full stabilizer of {lᵢⱼ}.
    pub fn canonical_form(&self) -> Vec<LatticeVector> {
        let mut c = self.ledger_classes();
        c.sort();
        c
    }

    /// w·identity for a random word of `steps` reflections.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, steps: usize) -> Self {
        let gens = weyl_generators();
        let mut m = Self::identity();
        for _ in 0..steps {
            m = m.transformed(&gens[rng.gen_range(0..gens.len())].1);
        }
        m
    }
}

/// The W(E₇)-orbit of a marking modulo Σ₈ relabelling: one representative
/// per class, starting with `m` itself.
pub fn hessian_fiber(m: &LedgerMarking) -> Vec<LedgerMarking> {
    let gens = weyl_generators();
    let mut seen: HashSet<Vec<LatticeVector>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([m.clone()]);
    seen.insert(m.canonical_form());
    while let Some(cur) = queue.pop_front() {
        for (_, g) in &gens {
            let next = cur.transformed(g);
            if seen.insert(next.canonical_form()) {
                queue.push_back(next);
            }
        }
        out.push(cur);
    }
    out
}

/// Orbit sizes of W(E₇) on the roots and on the lines, from α₁₂ and l₁₂.
pub fn orbit_sizes() -> (usize, usize) {
    let gens: Vec<_> = weyl_generators().into_iter().map(|(_, g)| g).collect();
    let orbit_of = |start: LatticeVector| {
        let mut seen = HashSet::from([start]);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for g in &gens {
                let w = g.apply(&v);
                if seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len()
    };
    (orbit_of(root_vector(RootLabel::Pair(1, 2))), orbit_of(line_vector(LineLabel::L(1, 2))))
}

/// Rational helper for callers needing exact coordinates in the simple-root basis.
pub fn simple_root_coordinates(v: &LatticeVector) -> Result<Vec<i64>> {
    if v.dot(&LatticeVector::k()) != 0 {
        return Err(Error::NotInCanonicalComplement);
    }
    let q = Rationals;
    let sr = simple_roots();
    let b: Vec<Vec<BigRational>> = (0..8)
        .map(|i| (0..8).map(|j| q.from_i64(if j < 7 { sr[j].0[i] } else { LatticeVector::k().0[i] })).collect())
        .collect();
    let inv = linalg::inverse(&q, &b).expect("basis");
    let rhs: Vec<BigRational> = v.0.iter().map(|&c| q.from_i64(c)).collect();
    let x = linalg::mat_vec(&q, &inv, &rhs);
    debug_assert!(x[7].is_zero());
    x[..7]
        .iter()
        .map(|c| {
            c.is_integer()
                .then(|| c.to_integer().to_i64().unwrap())
                .ok_or_else(|| Error::InvariantViolation("non-integral root coordinate".into()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_and_norms() {
        let roots = enumerate(EnumerationKind::PositiveRoots);
        let ls = enumerate(EnumerationKind::Lines);
        assert_eq!(roots.len(), 63);
        assert_eq!(ls.len(), 56);
        let k = LatticeVector::k();
        assert_eq!(k.dot(&k), 2);
        assert!(roots.iter().all(|a| a.dot(a) == -2 && a.dot(&k) == 0));
        // with k the canonical class a line meets −k once
        assert!(ls.iter().all(|l| l.dot(l) == -1 && l.dot(&k) == -1));
        assert_eq!(roots.iter().collect::<HashSet<_>>().len(), 63);
        assert_eq!(ls.iter().collect::<HashSet<_>>().len(), 56);
        assert_eq!(LatticeVector::e(8), LatticeVector::e(0).add(&k));
    }

    #[test]
    fn reflection_examples() {
        let a123 = root_vector(RootLabel::Triple(1, 2, 3));
        assert_eq!(reflect(&a123, &line_vector(LineLabel::L(4, 5))).unwrap(), line_vector(LineLabel::LPrime(6, 7)));
        assert_eq!(reflect(&a123, &line_vector(LineLabel::L(1, 4))).unwrap(), line_vector(LineLabel::L(1, 4)));
        // {1,8} meets {1,2,3,8} twice, so l18 = e1 is moved
        assert_eq!(reflect(&a123, &line_vector(LineLabel::L(1, 8))).unwrap(), line_vector(LineLabel::LPrime(2, 3)));
        let a12 = root_vector(RootLabel::Pair(1, 2));
        assert_eq!(reflect(&a12, &line_vector(LineLabel::L(1, 3))).unwrap(), line_vector(LineLabel::L(2, 3)));
        assert!(matches!(reflect(&LatticeVector::e(0), &a12), Err(Error::NotARoot(_))));
    }

    #[test]
    fn reflections_are_involutive_isometries() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let roots = all_roots();
        for _ in 0..100 {
            let a = roots[rng.gen_range(0..roots.len())];
            let v = LatticeVector(std::array::from_fn(|_| rng.gen_range(-5..=5)));
            let w = LatticeVector(std::array::from_fn(|_| rng.gen_range(-5..=5)));
            let sv = reflect(&a, &v).unwrap();
            assert_eq!(reflect(&a, &sv).unwrap(), v);
            assert_eq!(sv.dot(&reflect(&a, &w).unwrap()), v.dot(&w));
        }
        for (_, g) in weyl_generators() {
            assert!(g.preserves_form() && g.fixes_k());
            assert!(g.mul(&g).is_identity());
        }
    }

    #[test]
    fn rule_tables() {
        assert!(rule_table_crosscheck());
        assert!(!rule_table_crosscheck_with(RuleVariant::Swapped));
        for (i, j) in pair_labels() {
            let a = root_vector(RootLabel::Pair(i, j));
            for (label, v) in lines() {
                assert_eq!(line_label_of(&reflect(&a, &v).unwrap()), Some(transposition_rule((i, j), label)));
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_order(), 2_903_040);
        let sym: Vec<_> = sym8_generators().into_iter().map(|(_, g)| g).collect();
        assert_eq!(group_order(&sym).unwrap(), 40_320);
        assert_eq!(group_order(&sym[..1]).unwrap(), 2);
        assert_eq!(sym8_index().unwrap(), 72);
        assert_eq!(72, 2 * (1 + 35));
        let all: Vec<_> = weyl_generators().into_iter().map(|(_, g)| g).collect();
        assert_eq!(weyl_order() / group_order(&all).unwrap(), 1);
    }

    #[test]
    fn center_is_generated_by_w0() {
        let w0 = WeylElement::w0();
        let center = center_elements();
        assert_eq!(center.len(), 2);
        assert!(center.contains(&WeylElement::identity()) && center.contains(&w0));
        assert!(w0.preserves_form() && w0.fixes_k() && is_weyl_element(&w0));
        let a12 = root_vector(RootLabel::Pair(1, 2));
        assert_eq!(w0.apply(&a12), a12.neg());
        assert!(all_roots().iter().all(|a| w0.apply(a) == a.neg()));
        assert_eq!(w0.apply(&line_vector(LineLabel::L(3, 5))), line_vector(LineLabel::LPrime(3, 5)));
        // w₀ does not lie in Σ₈
        let sym: Vec<_> = sym8_generators().into_iter().map(|(_, g)| g).collect();
        assert!(!stabilizer_chain(&sym).unwrap().contains(&w0.root_permutation().unwrap()));
    }

    #[test]
    fn transitive_on_roots_and_lines() {
        assert_eq!(orbit_sizes(), (126, 56));
    }

    #[test]
    fn markings_and_ledgers() {
        let id = LedgerMarking::identity();
        assert_eq!(id.ledger_classes(), lines()[..28].iter().map(|(_, v)| *v).collect::<Vec<_>>());
        let dual = id.transformed(&WeylElement::w0());
        assert_eq!(dual.ledger_classes(), lines()[28..].iter().map(|(_, v)| *v).collect::<Vec<_>>());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let minus_k = LatticeVector::k().neg();
        for _ in 0..10 {
            let m = LedgerMarking::random(&mut rng, 30);
            assert!(LedgerMarking::new(*m.images()).is_ok());
            for (l, lp) in m.ledger_classes().iter().zip(m.dual_classes()) {
                assert_eq!(l.add(&lp), minus_k);
            }
        }
        let mut bad = *id.images();
        bad[1] = LatticeVector::e(2);
        assert!(matches!(LedgerMarking::new(bad), Err(Error::InvalidMarking(_))));
    }

    #[test]
    fn fiber_has_72_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        let mut markings = vec![LedgerMarking::identity()];
        markings.extend((0..5).map(|_| LedgerMarking::random(&mut rng, 25)));
        for m in &markings {
            let fiber = hessian_fiber(m);
            assert_eq!(fiber.len(), 72);
            let forms: HashSet<_> = fiber.iter().map(LedgerMarking::canonical_form).collect();
            let w0m = m.transformed(&WeylElement::w0());
            assert_ne!(w0m.canonical_form(), m.canonical_form());
            assert!(forms.contains(&w0m.canonical_form()));
            for (_, s) in sym8_generators() {
                assert_eq!(m.relabeled(&s).canonical_form(), m.canonical_form());
            }
        }
    }

    #[test]
    fn simple_roots_form_a_basis_of_the_root_lattice() {
        for (_, a) in positive_roots() {
            let c = simple_root_coordinates(&a).unwrap();
            // positive roots have coordinates of one sign
            assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
        }
        assert_eq!(simple_root_coordinates(&LatticeVector::e(1)), Err(Error::NotInCanonicalComplement));
    }
}
