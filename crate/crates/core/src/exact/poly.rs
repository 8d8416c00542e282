//! Dense univariate polynomials, used for root finding on lines, Sylvester
//! matrices and interpolation.

use crate::error::{Error, Result};
use crate::exact::field::Field;

/// Coefficients stored low degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `x + a`
    pub fn linear(field: &F, a: F::Elem) -> Self {
        Self::new(field, vec![a, field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Self::new(f, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let f = &self.field;
        let mut base = self.divrem(modulus).1;
        let mut acc = Self::constant(f, f.one()).divrem(modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(modulus).1;
            }
            base = base.mul(&base).divrem(modulus).1;
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in the field, sorted.
    ///
    /// Uses `gcd(f, x^q − x)` followed by deterministic equal-degree
    /// splitting, so it works for any finite field of odd order.
    pub fn roots(&self) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let q = f.order().ok_or(Error::NotEnumerable)?;
        let Some(deg) = self.degree() else {
            return Err(Error::ZeroForm);
        };
        if deg == 0 {
            return Ok(Vec::new());
        }
        let x = Self::new(f, vec![f.zero(), f.one()]);
        let modulus = self.monic();
        let xq = x.pow_mod(q, &modulus);
        let split = modulus.gcd(&xq.sub(&x));
        let mut roots = Vec::new();
        split_linear_factors(&split, q, &mut roots);
        roots.sort();
        Ok(roots)
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &F::Elem) -> usize {
        let f = &self.field;
        let lin = Self::new(f, vec![f.neg(r), f.one()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// Lagrange interpolation through `(xs[i], ys[i])` with distinct nodes.
    pub fn interpolate(field: &F, xs: &[F::Elem], ys: &[F::Elem]) -> Result<Self> {
        let f = field;
        if xs.len() != ys.len() {
            return Err(Error::DimensionMismatch("interpolation nodes and values".into()));
        }
        // Newton divided differences
        let n = xs.len();
        let mut coef = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = f.sub(&coef[i], &coef[i - 1]);
                let den = f.sub(&xs[i], &xs[i - j]);
                coef[i] = f
                    .div(&num, &den)
                    .ok_or_else(|| Error::Precondition("interpolation nodes repeat".into()))?;
            }
        }
        let mut poly = Self::zero(f);
        for i in (0..n).rev() {
            poly = poly.mul(&Self::new(f, vec![f.neg(&xs[i]), f.one()]));
            poly = poly.add(&Self::constant(f, coef[i].clone()));
        }
        Ok(poly)
    }
}

fn split_linear_factors<F: Field>(g: &UniPoly<F>, q: u64, out: &mut Vec<F::Elem>) {
    let f = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = g.monic();
            out.push(f.neg(&c.coeffs()[0]));
        }
        Some(d) => {
            let one = UniPoly::constant(f, f.one());
            for idx in 0..q {
                let a = f.element(idx);
                let h = UniPoly::linear(f, a).pow_mod((q - 1) / 2, g).sub(&one);
                let h = g.gcd(&h);
                let hd = h.degree().unwrap_or(0);
                if hd > 0 && hd < d {
                    let (rest, _) = g.divrem(&h);
                    split_linear_factors(&h, q, out);
                    split_linear_factors(&rest.monic(), q, out);
                    return;
                }
            }
            unreachable!("squarefree split polynomial always separates")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{PrimeField, QuadExt};

    fn from_roots(f: &PrimeField, roots: &[u64]) -> UniPoly<PrimeField> {
        roots
            .iter()
            .fold(UniPoly::constant(f, 1), |acc, r| acc.mul(&UniPoly::linear(f, f.neg(r))))
    }

    #[test]
    fn roots_of_products_of_linears() {
        let f = PrimeField::new(101).unwrap();
        let p = from_roots(&f, &[3, 17, 17, 99, 0]);
        assert_eq!(p.roots().unwrap(), vec![0, 3, 17, 99]);
        assert_eq!(p.root_multiplicity(&17), 2);
        // x² + 1 has no root mod 103 (103 ≡ 3 mod 4)
        let g = PrimeField::new(103).unwrap();
        let irr = UniPoly::new(&g, vec![1, 0, 1]);
        assert!(irr.roots().unwrap().is_empty());
    }

    #[test]
    fn roots_over_fp2() {
        let k = QuadExt::new(103).unwrap();
        let irr = UniPoly::new(&k, vec![k.one(), k.zero(), k.one()]);
        let r = irr.roots().unwrap();
        assert_eq!(r.len(), 2);
        for x in r {
            assert!(k.is_zero(&irr.eval(&x)));
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = PrimeField::new(31).unwrap();
        let p = UniPoly::new(&f, vec![5, 0, 7, 1, 30]);
        let xs: Vec<u64> = (0..5).collect();
        let ys: Vec<u64> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&f, &xs, &ys).unwrap(), p);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = PrimeField::new(13).unwrap();
        let a = from_roots(&f, &[1, 2, 3]);
        let b = from_roots(&f, &[2, 3, 5]).scale(&7);
        assert_eq!(a.gcd(&b), from_roots(&f, &[2, 3]));
    }
}
