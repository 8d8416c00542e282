//! The symplectic space 𝔽₂⁶ = k^⊥ / (2k^⊥ + radical), quadratic forms on it,
//! and the theta characteristics and Aronhold sets they encode.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::weyl::{self, LatticeVector, LineLabel, RootLabel, WeylElement};
use crate::{Error, Result};

/// Six bits; bit `j` is coordinate `j + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F2Vector(pub u8);

impl F2Vector {
    pub const ZERO: Self = Self(0);

    pub fn new(bits: u8) -> Self {
        assert!(bits < 64, "F2Vector has six bits");
        Self(bits)
    }

    pub fn all() -> impl Iterator<Item = F2Vector> {
        (0..64).map(F2Vector)
    }

    pub fn unit(j: usize) -> Self {
        Self(1 << j)
    }

    pub fn bit(&self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0 ^ other.0)
    }

    /// Coordinates swapped within each symplectic pair, so that
    /// ⟨u,v⟩ = popcount(u ∧ v.swapped()).
    fn swapped(&self) -> u8 {
        ((self.0 & 0b010101) << 1) | ((self.0 & 0b101010) >> 1)
    }

    /// ⟨u,v⟩ = Σⱼ (u_{2j−1}v_{2j} + u_{2j}v_{2j−1}).
    pub fn symplectic(&self, other: &Self) -> u8 {
        ((self.0 & other.swapped()).count_ones() % 2) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..6 {
            write!(f, "{}", self.bit(j) as u8)?;
        }
        Ok(())
    }
}

/// A quadratic form refining ⟨·,·⟩, determined by its values on the basis:
/// q(x) = Σ qᵢxᵢ + Σ_{i<j} xᵢxⱼ⟨eᵢ,eⱼ⟩.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadFormF2 {
    diagonal: u8,
}

impl QuadFormF2 {
    pub fn from_diagonal(diagonal: u8) -> Self {
        assert!(diagonal < 64);
        Self { diagonal }
    }

    pub fn diagonal(&self) -> u8 {
        self.diagonal
    }

    pub fn eval(&self, x: &F2Vector) -> u8 {
        let linear = (self.diagonal & x.0).count_ones();
        let cross = (x.0 & (x.0 >> 1) & 0b010101).count_ones();
        ((linear + cross) % 2) as u8
    }

    /// q + ⟨v,·⟩.
    pub fn shifted(&self, v: &F2Vector) -> Self {
        Self { diagonal: self.diagonal ^ v.swapped() }
    }

    /// Arf invariant Σⱼ q(a_j)q(b_j) over the standard symplectic pairs.
    pub fn arf(&self) -> u8 {
        (0..3).map(|j| self.eval(&F2Vector::unit(2 * j)) & self.eval(&F2Vector::unit(2 * j + 1))).sum::<u8>() % 2
    }

    pub fn is_odd(&self) -> bool {
        self.arf() == 1
    }

    pub fn zeros(&self) -> usize {
        F2Vector::all().filter(|x| self.eval(x) == 0).count()
    }
}

impl fmt::Debug for QuadFormF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadFormF2({})", F2Vector(self.diagonal))
    }
}

/// Lattice lifts (Aⱼ, Bⱼ) of a symplectic basis; res(v) = ((v,B₁),(v,A₁),…) mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pairs: [(LatticeVector, LatticeVector); 3],
}

fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

impl Restriction {
    /// Symplectic Gram–Schmidt mod 2 over the positive roots in their
    /// canonical order: each pair is the first projected root together with
    /// the first projected root pairing oddly with it.
    pub fn compute() -> Self {
        let roots: Vec<LatticeVector> = weyl::enumerate(weyl::EnumerationKind::PositiveRoots);
        let mut pairs: Vec<(LatticeVector, LatticeVector)> = Vec::new();
        let project = |pairs: &[(LatticeVector, LatticeVector)], r: &LatticeVector| {
            pairs.iter().fold(*r, |x, (a, b)| {
                let mut y = x;
                if odd(x.dot(b)) {
                    y = y.add(a);
                }
                if odd(x.dot(a)) {
                    y = y.add(b);
                }
                y
            })
        };
        while pairs.len() < 3 {
            let projected: Vec<LatticeVector> = roots.iter().map(|r| project(&pairs, r)).collect();
            let found = projected.iter().enumerate().find_map(|(i, x)| {
                projected[i + 1..].iter().find(|y| odd(x.dot(y))).map(|y| (*x, *y))
            });
            pairs.push(found.expect("k-perp mod 2 has rank six modulo its radical"));
        }
        Self { pairs: [pairs[0], pairs[1], pairs[2]] }
    }

    pub fn standard() -> &'static Self {
        static RES: OnceLock<Restriction> = OnceLock::new();
        RES.get_or_init(Self::compute)
    }

    pub fn pairs(&self) -> &[(LatticeVector, LatticeVector); 3] {
        &self.pairs
    }

    pub fn res(&self, v: &LatticeVector) -> Result<F2Vector> {
        if v.dot(&LatticeVector::k()) != 0 {
            return Err(Error::NotInCanonicalComplement);
        }
        let mut bits = 0u8;
        for (j, (a, b)) in self.pairs.iter().enumerate() {
            bits |= (odd(v.dot(b)) as u8) << (2 * j);
            bits |= (odd(v.dot(a)) as u8) << (2 * j + 1);
        }
        Ok(F2Vector(bits))
    }

    /// A lattice vector in k^⊥ with res = x.
    pub fn lift(&self, x: &F2Vector) -> LatticeVector {
        self.pairs.iter().enumerate().fold(LatticeVector::ZERO, |acc, (j, (a, b))| {
            let acc = if x.bit(2 * j) { acc.add(a) } else { acc };
            if x.bit(2 * j + 1) {
                acc.add(b)
            } else {
                acc
            }
        })
    }

    /// Matrix of the induced map ḡ on 𝔽₂⁶, as the images of the unit vectors.
    pub fn sp_image(&self, g: &WeylElement) -> [F2Vector; 6] {
        std::array::from_fn(|j| self.res(&g.apply(&self.lift(&F2Vector::unit(j)))).expect("W fixes k"))
    }
}

pub fn res(v: &LatticeVector) -> Result<F2Vector> {
    Restriction::standard().res(v)
}

pub fn apply_linear(columns: &[F2Vector; 6], x: &F2Vector) -> F2Vector {
    (0..6).filter(|&j| x.bit(j)).fold(F2Vector::ZERO, |acc, j| acc.add(&columns[j]))
}

/// q₀: 1 on the images of the αᵢⱼ, 0 on the images of the αᵢⱼₖ and on 0,
/// checked to be a quadratic form refining ⟨·,·⟩.
pub fn parity_form() -> Result<QuadFormF2> {
    let r = Restriction::standard();
    let mut table = [None::<u8>; 64];
    table[0] = Some(0);
    for (label, a) in weyl::positive_roots() {
        let x = r.res(&a)?;
        let value = matches!(label, RootLabel::Pair(..)) as u8;
        if table[x.0 as usize].replace(value).is_some() {
            return Err(Error::InvariantViolation(format!("two positive roots restrict to {x}")));
        }
    }
    let table: Vec<u8> = table.iter().map(|v| v.ok_or_else(|| Error::InvariantViolation("res is not onto".into()))).collect::<Result<_>>()?;
    for u in F2Vector::all() {
        for v in F2Vector::all() {
            if table[u.add(&v).0 as usize] != (table[u.0 as usize] + table[v.0 as usize] + u.symplectic(&v)) % 2 {
                return Err(Error::InvariantViolation(format!("polarization fails at ({u}, {v})")));
            }
        }
    }
    let diagonal = (0..6).fold(0u8, |acc, j| acc | table[1 << j] << j);
    let q = QuadFormF2::from_diagonal(diagonal);
    debug_assert!(F2Vector::all().all(|x| q.eval(&x) == table[x.0 as usize]));
    Ok(q)
}

fn q0() -> QuadFormF2 {
    static Q0: OnceLock<QuadFormF2> = OnceLock::new();
    *Q0.get_or_init(|| parity_form().expect("root-type partition is quadratic"))
}

/// A theta characteristic q_v = q₀ + ⟨v,·⟩.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaChar {
    pub v: F2Vector,
    pub form: QuadFormF2,
}

/// All 64 forms q_v split into (odd, even), each ordered by v.
pub fn theta_chars() -> Result<(Vec<ThetaChar>, Vec<ThetaChar>)> {
    let q = parity_form()?;
    Ok(F2Vector::all().map(|v| ThetaChar { v, form: q.shifted(&v) }).partition(|t| t.form.is_odd()))
}

/// The v with lᵢⱼ, l′ᵢⱼ ↦ q_v, namely v = res(αᵢⱼ).
pub fn line_theta(line: LineLabel) -> F2Vector {
    let (i, j) = line.indices();
    res(&weyl::root_vector(RootLabel::Pair(i, j))).expect("roots lie in k-perp")
}

/// The c with g·q₀ = q_c, where (g·q)(x) = q(ḡ⁻¹x).
pub fn form_shift(columns: &[F2Vector; 6]) -> F2Vector {
    let q = q0();
    // ḡ preserves ⟨·,·⟩, so (g·q₀)(ḡx) = q₀(x); read g·q₀ off the images
    let mut moved = [0u8; 64];
    for x in F2Vector::all() {
        moved[apply_linear(columns, &x).0 as usize] = q.eval(&x);
    }
    // q_c(e_j) − q₀(e_j) = ⟨c, e_j⟩ = c with the pair coordinates swapped
    let diff = (0..6).fold(0u8, |acc, j| acc | ((moved[1 << j] ^ q.eval(&F2Vector::unit(j))) << j));
    F2Vector(F2Vector(diff).swapped())
}

/// The action of g on characteristics: q_v ↦ g·q_v = q_{ḡv + c_g}.
pub fn transport(g: &WeylElement, v: &F2Vector) -> F2Vector {
    let cols = Restriction::standard().sp_image(g);
    apply_linear(&cols, v).add(&form_shift(&cols))
}

fn is_aronhold_triple(a: F2Vector, b: F2Vector, c: F2Vector) -> bool {
    q0().eval(&a.add(&b).add(&c)) == 0
}

fn odd_vectors() -> Vec<F2Vector> {
    F2Vector::all().filter(|v| q0().eval(v) == 1).collect()
}

/// All 7-sets of odd characteristics whose triple sums are all even, each set
/// sorted, by depth-first extension of partial sets.
pub fn aronhold_enumerate() -> Vec<[F2Vector; 7]> {
    let odd = odd_vectors();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(7);
    fn extend(odd: &[F2Vector], start: usize, stack: &mut Vec<usize>, out: &mut Vec<[F2Vector; 7]>) {
        if stack.len() == 7 {
            out.push(std::array::from_fn(|i| odd[stack[i]]));
            return;
        }
        for c in start..odd.len() {
            let ok = (0..stack.len())
                .all(|a| (a + 1..stack.len()).all(|b| is_aronhold_triple(odd[stack[a]], odd[stack[b]], odd[c])));
            if ok {
                stack.push(c);
                extend(odd, c + 1, stack, out);
                stack.pop();
            }
        }
    }
    extend(&odd, 0, &mut stack, &mut out);
    out
}

/// The same sets by testing every 7-subset of the 28 odd characteristics.
pub fn aronhold_full_scan() -> Vec<[F2Vector; 7]> {
    let odd = odd_vectors();
    let n = odd.len();
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3, 4, 5, 6];
    loop {
        let set: [F2Vector; 7] = idx.map(|i| odd[i]);
        let ok = (0..7).all(|a| (a + 1..7).all(|b| (b + 1..7).all(|c| is_aronhold_triple(set[a], set[b], set[c]))));
        if ok {
            out.push(set);
        }
        // next combination in lexicographic order
        let Some(pos) = (0..7).rev().find(|&i| idx[i] < n - 7 + i) else { break };
        idx[pos] += 1;
        for i in pos + 1..7 {
            idx[i] = idx[i - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElement;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::{HashMap, HashSet};

    #[test]
    fn symplectic_form_basics() {
        assert_eq!(F2Vector::unit(0).symplectic(&F2Vector::unit(1)), 1);
        assert_eq!(F2Vector::unit(0).symplectic(&F2Vector::unit(2)), 0);
        for u in F2Vector::all() {
            assert_eq!(u.symplectic(&u), 0);
        }
    }

    #[test]
    fn res_is_a_bijection_on_positive_roots() {
        let images: HashSet<F2Vector> = weyl::positive_roots().iter().map(|(_, a)| res(a).unwrap()).collect();
        assert_eq!(images.len(), 63);
        assert!(!images.contains(&F2Vector::ZERO));
        for a in weyl::all_roots() {
            assert_eq!(res(a).unwrap(), res(&a.neg()).unwrap());
        }
        let a12 = weyl::root_vector(RootLabel::Pair(1, 2));
        let a13 = weyl::root_vector(RootLabel::Pair(1, 3));
        assert_eq!(res(&a12.add(&a13.scale(2))).unwrap(), res(&a12).unwrap());
        assert_eq!(res(&LatticeVector::e(0)), Err(Error::NotInCanonicalComplement));
    }

    #[test]
    fn res_transports_the_form() {
        let roots = weyl::all_roots();
        for a in roots {
            for b in roots {
                assert_eq!(res(a).unwrap().symplectic(&res(b).unwrap()) as i64, a.dot(b).rem_euclid(2));
            }
        }
        // the radical of k-perp mod 2 restricts to zero
        let r = Restriction::standard();
        for x in F2Vector::all() {
            assert_eq!(r.res(&r.lift(&x)).unwrap(), x);
        }
    }

    #[test]
    fn parity_form_counts() {
        let q = parity_form().unwrap();
        assert_eq!(q.eval(&res(&weyl::root_vector(RootLabel::Pair(1, 2))).unwrap()), 1);
        assert_eq!(q.eval(&res(&weyl::root_vector(RootLabel::Triple(1, 2, 3))).unwrap()), 0);
        assert_eq!(q.zeros(), 36);
        assert_eq!(q.arf(), 0);
        for u in F2Vector::all() {
            for v in F2Vector::all() {
                assert_eq!(q.eval(&u.add(&v)), (q.eval(&u) + q.eval(&v) + u.symplectic(&v)) % 2);
            }
        }
    }

    #[test]
    fn theta_characteristics() {
        let (odd, even) = theta_chars().unwrap();
        assert_eq!((odd.len(), even.len()), (28, 36));
        assert!(even.iter().any(|t| t.v.is_zero() && t.form == parity_form().unwrap()));
        let q = parity_form().unwrap();
        for t in odd.iter().chain(&even) {
            assert_eq!(t.form.is_odd(), q.eval(&t.v) == 1);
            assert_eq!(t.form.zeros(), if t.form.is_odd() { 28 } else { 36 });
        }
        // two-to-one from lines onto odd characteristics
        let mut fibers: HashMap<F2Vector, usize> = HashMap::new();
        for (l, _) in weyl::lines() {
            *fibers.entry(line_theta(l)).or_default() += 1;
        }
        assert_eq!(fibers.len(), 28);
        assert!(fibers.iter().all(|(v, &n)| n == 2 && q.eval(v) == 1));
    }

    #[test]
    fn line_map_is_equivariant() {
        for (_, g) in weyl::weyl_generators() {
            for (label, v) in weyl::lines() {
                let image = weyl::line_label_of(&g.apply(&v)).unwrap();
                assert_eq!(line_theta(image), transport(&g, &line_theta(label)));
            }
        }
    }

    #[test]
    fn sym8_fixes_the_even_form() {
        let r = Restriction::standard();
        for (_, s) in weyl::sym8_generators() {
            assert!(form_shift(&r.sp_image(&s)).is_zero());
        }
        let moved = weyl::weyl_generators().into_iter().filter(|(_, g)| !form_shift(&r.sp_image(g)).is_zero()).count();
        assert_eq!(moved, 35);
        // w0 acts trivially on 𝔽₂⁶
        let cols = r.sp_image(&WeylElement::w0());
        assert!((0..6).all(|j| cols[j] == F2Vector::unit(j)));
    }

    #[test]
    fn aronhold_sets() {
        let pruned = aronhold_enumerate();
        assert_eq!(pruned.len(), 288);
        assert_eq!(pruned, aronhold_full_scan());
        let known: HashSet<[F2Vector; 7]> = pruned.iter().copied().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(288);
        let gens = weyl::weyl_generators();
        for _ in 0..5 {
            let mut g = WeylElement::identity();
            for _ in 0..20 {
                g = gens[rng.gen_range(0..gens.len())].1.mul(&g);
            }
            let set = pruned[rng.gen_range(0..pruned.len())];
            let mut image = set.map(|v| transport(&g, &v));
            image.sort();
            assert!(known.contains(&image));
        }
    }
}
