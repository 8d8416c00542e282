//! Exact scalar fields: the rationals, prime fields of word size, and their
//! quadratic extensions.
//!
//! A [`Field`] value is a *descriptor* (it knows the modulus); elements are
//! plain data (`u64`, [`Fp2`], [`BigRational`]) and all arithmetic goes
//! through the descriptor. This keeps elements `Copy`-cheap in the finite
//! case, which matters for the exhaustive enumerations in the geometry
//! modules.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;
    /// Field in which every quadratic over `Self` splits, when one is
    /// available (only for prime fields).
    type Ext: Field;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// The `index`-th element in the canonical enumeration order.
    ///
    /// Only meaningful for finite fields; `index` must be below `order()`.
    fn element(&self, index: u64) -> Self::Elem;
    /// Whether `a` is a canonical (reduced) representative of this field.
    fn contains(&self, a: &Self::Elem) -> bool;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn kind(&self) -> FieldKind;
    fn to_scalar(&self, a: &Self::Elem) -> FieldScalar;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn extension(&self) -> Option<Self::Ext>;
    fn embed(&self, ext: &Self::Ext, a: &Self::Elem) -> <Self::Ext as Field>::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// A square root of `a` in this field, if one exists.
    ///
    /// Finite fields use Tonelli–Shanks with the first non-residue of the
    /// canonical enumeration, so the chosen root is deterministic.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        let q = self.order()?;
        let half = (q - 1) / 2;
        if !self.is_one(&self.pow(a, half)) {
            return None;
        }
        let mut s = 0u32;
        let mut t = q - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let minus_one = self.neg(&self.one());
        let z = (1..q)
            .map(|i| self.element(i))
            .find(|z| self.pow(z, half) == minus_one)?;
        let mut m = s;
        let mut c = self.pow(&z, t);
        let mut x = self.pow(a, t.div_ceil(2));
        let mut b = self.pow(a, t);
        while !self.is_one(&b) {
            let mut i = 0u32;
            let mut b2 = b.clone();
            while !self.is_one(&b2) {
                b2 = self.mul(&b2, &b2);
                i += 1;
            }
            let mut g = c.clone();
            for _ in 0..(m - i - 1) {
                g = self.mul(&g, &g);
            }
            x = self.mul(&x, &g);
            c = self.mul(&g, &g);
            b = self.mul(&b, &c);
            m = i;
        }
        Some(x)
    }

    fn elements(&self) -> Result<Box<dyn Iterator<Item = Self::Elem> + '_>> {
        let q = self.order().ok_or(Error::NotEnumerable)?;
        Ok(Box::new((0..q).map(move |i| self.element(i))))
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self::Elem>>(&self, it: I) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_modulus(p: u64) -> Result<()> {
    if p >= 1 << 31 {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    Ok(())
}

fn parse_integer(s: &str) -> Result<i128> {
    s.trim()
        .parse::<i128>()
        .map_err(|_| Error::InvalidElement(s.to_string()))
}

/// The prime field 𝔽_p for an odd prime `5 ≤ p < 2³¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    /// Reduction of a rational number; `None` when p divides the denominator.
    pub fn reduce_rational(&self, r: &BigRational) -> Option<u64> {
        let m = BigInt::from(self.p);
        let red = |n: &BigInt| ((n % &m + &m) % &m).to_u64().unwrap();
        self.inv(&red(r.denom())).map(|d| self.mul(&red(r.numer()), &d))
    }
}

impl Field for PrimeField {
    type Elem = u64;
    type Ext = QuadExt;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Prime { p: self.p }
    }
    fn to_scalar(&self, a: &u64) -> FieldScalar {
        FieldScalar::Prime { p: self.p, value: *a }
    }
    fn parse(&self, s: &str) -> Result<u64> {
        Ok(self.reduce_i128(parse_integer(s)?))
    }
    fn extension(&self) -> Option<QuadExt> {
        Some(QuadExt::over(*self))
    }
    fn embed(&self, _ext: &QuadExt, a: &u64) -> Fp2 {
        Fp2 { re: *a, im: 0 }
    }
}

/// Element `re + im·i` of 𝔽_{p²}, where `i² = n` for the field's non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp2 {
    pub re: u64,
    pub im: u64,
}

/// 𝔽_{p²} = 𝔽_p[i]/(i² − n) with `n` the smallest quadratic non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadExt {
    base: PrimeField,
    nonresidue: u64,
}

impl QuadExt {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self::over(PrimeField::new(p)?))
    }

    pub fn over(base: PrimeField) -> Self {
        let p = base.p;
        let nonresidue = (2..p)
            .find(|n| base.pow(n, (p - 1) / 2) == p - 1)
            .expect("odd prime has a non-residue");
        Self { base, nonresidue }
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    /// Frobenius conjugate `re − im·i`.
    pub fn conjugate(&self, a: &Fp2) -> Fp2 {
        Fp2 { re: a.re, im: self.base.neg(&a.im) }
    }

    /// The element when it lies in the prime subfield.
    pub fn to_base(&self, a: &Fp2) -> Option<u64> {
        (a.im == 0).then_some(a.re)
    }
}

impl Field for QuadExt {
    type Elem = Fp2;
    type Ext = QuadExt;

    fn zero(&self) -> Fp2 {
        Fp2 { re: 0, im: 0 }
    }
    fn one(&self) -> Fp2 {
        Fp2 { re: 1, im: 0 }
    }
    fn from_i64(&self, n: i64) -> Fp2 {
        Fp2 { re: self.base.from_i64(n), im: 0 }
    }
    fn add(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        Fp2 { re: self.base.add(&a.re, &b.re), im: self.base.add(&a.im, &b.im) }
    }
    fn sub(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        Fp2 { re: self.base.sub(&a.re, &b.re), im: self.base.sub(&a.im, &b.im) }
    }
    fn mul(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        let f = &self.base;
        let rr = f.mul(&a.re, &b.re);
        let ii = f.mul(&f.mul(&a.im, &b.im), &self.nonresidue);
        let ri = f.mul(&a.re, &b.im);
        let ir = f.mul(&a.im, &b.re);
        Fp2 { re: f.add(&rr, &ii), im: f.add(&ri, &ir) }
    }
    fn neg(&self, a: &Fp2) -> Fp2 {
        Fp2 { re: self.base.neg(&a.re), im: self.base.neg(&a.im) }
    }
    fn inv(&self, a: &Fp2) -> Option<Fp2> {
        let f = &self.base;
        let norm = f.sub(&f.mul(&a.re, &a.re), &f.mul(&f.mul(&a.im, &a.im), &self.nonresidue));
        let ninv = f.inv(&norm)?;
        Some(Fp2 { re: f.mul(&a.re, &ninv), im: f.mul(&f.neg(&a.im), &ninv) })
    }
    fn is_zero(&self, a: &Fp2) -> bool {
        a.re == 0 && a.im == 0
    }
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.base.p * self.base.p)
    }
    fn element(&self, index: u64) -> Fp2 {
        Fp2 { re: index / self.base.p, im: index % self.base.p }
    }
    fn contains(&self, a: &Fp2) -> bool {
        a.re < self.base.p && a.im < self.base.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp2 {
        Fp2 { re: self.base.random(rng), im: self.base.random(rng) }
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Quad { p: self.base.p }
    }
    fn to_scalar(&self, a: &Fp2) -> FieldScalar {
        FieldScalar::Quad { p: self.base.p, re: a.re, im: a.im }
    }
    fn parse(&self, s: &str) -> Result<Fp2> {
        let t = s.trim();
        let bad = || Error::InvalidElement(s.to_string());
        if let Some(body) = t.strip_suffix('i') {
            // split "a+b" / "a-b" at the last sign that is not the leading one
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .last();
            let (re, im) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                other => other.strip_prefix('+').unwrap_or(other),
            };
            let re = parse_integer(re).map_err(|_| bad())?;
            let im = parse_integer(im).map_err(|_| bad())?;
            Ok(Fp2 { re: self.base.reduce_i128(re), im: self.base.reduce_i128(im) })
        } else {
            Ok(Fp2 { re: self.base.reduce_i128(parse_integer(t)?), im: 0 })
        }
    }
    fn extension(&self) -> Option<QuadExt> {
        None
    }
    fn embed(&self, _ext: &QuadExt, a: &Fp2) -> Fp2 {
        *a
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    type Ext = Rationals;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn element(&self, _index: u64) -> BigRational {
        panic!("the rationals cannot be enumerated")
    }
    fn contains(&self, _a: &BigRational) -> bool {
        true
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-20..=20))
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
    fn to_scalar(&self, a: &BigRational) -> FieldScalar {
        FieldScalar::Rational(a.clone())
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| Error::InvalidElement(s.into()))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| Error::InvalidElement(s.into()))?;
            if d.is_zero() {
                return Err(Error::InvalidElement(s.into()));
            }
            Ok(BigRational::new(n, d))
        } else {
            let n = BigInt::from_str(t).map_err(|_| Error::InvalidElement(s.into()))?;
            Ok(BigRational::from_integer(n))
        }
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = a.numer().sqrt();
        let d = a.denom().sqrt();
        (&n * &n == *a.numer() && &d * &d == *a.denom()).then(|| BigRational::new(n, d))
    }
    fn extension(&self) -> Option<Rationals> {
        None
    }
    fn embed(&self, _ext: &Rationals, a: &BigRational) -> BigRational {
        a.clone()
    }
}

/// Which field a serialized scalar belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Prime { p: u64 },
    Quad { p: u64 },
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "F_{p}"),
            FieldKind::Quad { p } => write!(f, "F_{p}^2"),
        }
    }
}

/// A field element tagged with its field, for I/O and for the
/// field-agnostic entry points that must reject mixed input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
    Quad { p: u64, re: u64, im: u64 },
}

impl FieldScalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldScalar::Rational(_) => FieldKind::Rational,
            FieldScalar::Prime { p, .. } => FieldKind::Prime { p: *p },
            FieldScalar::Quad { p, .. } => FieldKind::Quad { p: *p },
        }
    }

    /// Parses the canonical string encoding for a given field.
    pub fn parse(kind: FieldKind, s: &str) -> Result<Self> {
        Ok(match kind {
            FieldKind::Rational => FieldScalar::Rational(Rationals.parse(s)?),
            FieldKind::Prime { p } => {
                FieldScalar::Prime { p, value: PrimeField::new(p)?.parse(s)? }
            }
            FieldKind::Quad { p } => {
                let v = QuadExt::new(p)?.parse(s)?;
                FieldScalar::Quad { p, re: v.re, im: v.im }
            }
        })
    }

    pub fn as_prime(&self) -> Option<u64> {
        match self {
            FieldScalar::Prime { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn as_quad(&self) -> Option<Fp2> {
        match self {
            FieldScalar::Quad { re, im, .. } => Some(Fp2 { re: *re, im: *im }),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Small integer value for reporting, when the scalar is an integer.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldScalar::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            FieldScalar::Prime { value, .. } => Some(*value as i64),
            _ => None,
        }
    }
}

impl Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Prime { value, .. } => write!(f, "{value}"),
            FieldScalar::Quad { re, im, .. } => write!(f, "{re}+{im}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_small_and_composite_moduli() {
        assert_eq!(PrimeField::new(2), Err(Error::UnsupportedCharacteristic(2)));
        assert_eq!(PrimeField::new(3), Err(Error::UnsupportedCharacteristic(3)));
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn quad_ext_uses_smallest_nonresidue() {
        // 2 is a residue mod 7 (3² = 2), 3 is not
        assert_eq!(QuadExt::new(7).unwrap().nonresidue(), 3);
        assert_eq!(QuadExt::new(11).unwrap().nonresidue(), 2);
    }

    #[test]
    fn fp2_field_axioms_on_samples() {
        let k = QuadExt::new(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = k.random(&mut rng);
            let b = k.random(&mut rng);
            let c = k.random(&mut rng);
            assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
            if !k.is_zero(&a) {
                assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
            }
            // Frobenius is the conjugation
            assert_eq!(k.pow(&a, 13), k.conjugate(&a));
        }
    }

    #[test]
    fn every_fp_element_has_a_root_in_fp2() {
        let f = PrimeField::new(19).unwrap();
        let k = f.extension().unwrap();
        for a in 0..19 {
            let r = k.sqrt(&f.embed(&k, &a)).unwrap();
            assert_eq!(k.mul(&r, &r), Fp2 { re: a, im: 0 });
        }
        let squares = (0..19u64).filter(|a| f.sqrt(a).is_some()).count();
        assert_eq!(squares, 10);
    }

    #[test]
    fn sqrt_in_fp2() {
        let k = QuadExt::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = k.random(&mut rng);
            let sq = k.mul(&a, &a);
            let r = k.sqrt(&sq).unwrap();
            assert_eq!(k.mul(&r, &r), sq);
        }
    }

    #[test]
    fn scalar_strings() {
        let q = Rationals;
        let x = q.parse("3/7").unwrap();
        assert_eq!(q.to_scalar(&x).to_string(), "3/7");
        assert!(q.parse("1/0").is_err());
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 12);
        assert!(f.parse("x").is_err());
        let k = QuadExt::new(13).unwrap();
        for s in ["3+4i", "3-4i", "4i", "7"] {
            let v = k.parse(s).unwrap();
            let back = k.to_scalar(&v).to_string();
            assert_eq!(k.parse(&back).unwrap(), v);
        }
        assert_eq!(k.parse("3-4i").unwrap(), Fp2 { re: 3, im: 9 });
    }

    #[test]
    fn rational_sqrt() {
        let q = Rationals;
        assert_eq!(q.sqrt(&q.parse("9/4").unwrap()), Some(q.parse("3/2").unwrap()));
        assert_eq!(q.sqrt(&q.parse("2").unwrap()), None);
    }

    #[test]
    fn rational_reduction() {
        let f = PrimeField::new(11).unwrap();
        assert_eq!(f.reduce_rational(&Rationals.parse("-3/7").unwrap()), Some(f.div(&8, &7).unwrap()));
        assert_eq!(f.reduce_rational(&Rationals.parse("1/22").unwrap()), None);
    }
}
