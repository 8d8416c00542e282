//! Sparse homogeneous polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::field::Field;

/// Exponent vector. Ordered graded-lexicographically: higher total degree
/// first, then larger exponent of the earliest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given degree, leading (graded-lex largest) first.
pub fn monomials(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(vars_left: usize, deg_left: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if vars_left == 1 {
            prefix.push(deg_left as u16);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=deg_left).rev() {
            prefix.push(e as u16);
            rec(vars_left - 1, deg_left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(num_vars, degree, &mut Vec::new(), &mut out);
    out
}

/// A homogeneous form `Σ c_m x^m` with every stored coefficient nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseForm<F: Field> {
    field: F,
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> SparseForm<F> {
    pub fn zero(field: &F, num_vars: usize, degree: u32) -> Self {
        Self { field: field.clone(), num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(field: &F, num_vars: usize, c: F::Elem) -> Self {
        let mut f = Self::zero(field, num_vars, 0);
        if !field.is_zero(&c) {
            f.terms.insert(Monomial(vec![0; num_vars]), c);
        }
        f
    }

    pub fn var(field: &F, num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut f = Self::zero(field, num_vars, 1);
        f.terms.insert(Monomial(e), field.one());
        f
    }

    /// `Σ coeffs[i]·x_i`.
    pub fn linear(field: &F, coeffs: &[F::Elem]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            field,
            n,
            1,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
        .expect("linear terms are homogeneous")
    }

    /// Builds a form of the declared degree, summing repeated monomials and
    /// dropping zero coefficients.
    pub fn from_terms<I>(field: &F, num_vars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, F::Elem)>,
    {
        let mut f = Self::zero(field, num_vars, degree);
        for (exps, c) in terms {
            if exps.len() != num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "monomial {exps:?} in a form of {num_vars} variables"
                )));
            }
            let m = Monomial(exps);
            if m.degree() != degree {
                return Err(Error::NotHomogeneous(format!(
                    "monomial {:?} has degree {}, expected {degree}",
                    m.0,
                    m.degree()
                )));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        let f = &self.field;
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = f.add(existing, &c);
                if f.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u16]) -> F::Elem {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "forms in different numbers of variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = f.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(s) {
            return Self::zero(f, self.num_vars, self.degree);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = f.mul(c, s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let f = &self.field;
        let mut out = Self::zero(f, self.num_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), f.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.num_vars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.num_vars, "evaluation point has wrong length");
        let f = &self.field;
        let d = self.degree as usize;
        let powers: Vec<Vec<F::Elem>> = point
            .iter()
            .map(|x| {
                let mut p = Vec::with_capacity(d + 1);
                p.push(f.one());
                for k in 1..=d {
                    p.push(f.mul(&p[k - 1], x));
                }
                p
            })
            .collect();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = f.mul(&t, &powers[v][e as usize]);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// ∂/∂x_i, homogeneous of degree `degree − 1` (a constant form maps to
    /// the zero form of degree 0).
    pub fn derivative(&self, i: usize) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f, self.num_vars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), f.mul(c, &f.from_i64(e as i64)));
        }
        out
    }

    /// Composition `F(L_0, …, L_{n−1})` where every `L_i` has the same degree
    /// and number of variables.
    pub fn substitute(&self, images: &[SparseForm<F>]) -> Self {
        assert_eq!(images.len(), self.num_vars, "one image per variable");
        let f = &self.field;
        let (nv, e) = match images.first() {
            Some(l) => (l.num_vars, l.degree),
            None => (0, 0),
        };
        let mut cache: Vec<Vec<SparseForm<F>>> = images
            .iter()
            .map(|l| vec![SparseForm::constant(f, nv, f.one()), l.clone()])
            .collect();
        let mut out = Self::zero(f, nv, self.degree * e);
        for (m, c) in &self.terms {
            let mut t = SparseForm::constant(f, nv, c.clone());
            for (v, &ex) in m.0.iter().enumerate() {
                while cache[v].len() <= ex as usize {
                    let next = cache[v].last().unwrap().mul(&images[v]);
                    cache[v].push(next);
                }
                t = t.mul(&cache[v][ex as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Same form with coefficients mapped into another field.
    pub fn map_field<G: Field>(&self, target: &G, map: impl Fn(&F::Elem) -> G::Elem) -> SparseForm<G> {
        SparseForm::from_terms(
            target,
            self.num_vars,
            self.degree,
            self.terms.iter().map(|(m, c)| (m.0.clone(), map(c))),
        )
        .expect("shape preserved")
    }

    /// Lifts into the quadratic extension of the field.
    pub fn lift(&self, ext: &F::Ext) -> SparseForm<F::Ext> {
        self.map_field(ext, |c| self.field.embed(ext, c))
    }

    /// For a binary form of degree d, coefficients `a_k` of `s^{d−k} t^k`.
    pub fn binary_coeffs(&self) -> Vec<F::Elem> {
        assert_eq!(self.num_vars, 2, "binary form expected");
        let d = self.degree as u16;
        (0..=d).map(|k| self.coeff(&[d - k, k])).collect()
    }

    pub fn from_binary_coeffs(field: &F, coeffs: &[F::Elem]) -> Self {
        let d = coeffs.len() as u16 - 1;
        Self::from_terms(
            field,
            2,
            d as u32,
            coeffs.iter().enumerate().map(|(k, c)| (vec![d - k as u16, k as u16], c.clone())),
        )
        .expect("binary terms are homogeneous")
    }
}

fn var_names(n: usize) -> Vec<String> {
    match n {
        2 => vec!["s".into(), "t".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (0..n).map(|i| format!("x{i}")).collect(),
    }
}

impl<F: Field> fmt::Display for SparseForm<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let names = var_names(self.num_vars);
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(out, " + ")?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{e}", names[v]) })
                .collect();
            let coeff = self.field.to_scalar(c).to_string();
            if mono.is_empty() {
                write!(out, "{coeff}")?;
            } else if self.field.is_one(c) {
                write!(out, "{}", mono.join("*"))?;
            } else {
                write!(out, "{coeff}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The gradient `(∂F/∂x_0, …, ∂F/∂x_n)`.
pub fn gradient<F: Field>(form: &SparseForm<F>) -> Vec<SparseForm<F>> {
    (0..form.num_vars()).map(|i| form.derivative(i)).collect()
}
