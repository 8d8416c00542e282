//! Perfect-square detection for binary forms and resultants of ternary forms.

use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::form::SparseForm;
use crate::exact::linalg;
use crate::exact::poly::UniPoly;
use crate::exact::projective::ProjPoint;

/// `f = c·g²` with `g` monic in the graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRoot<F: Field> {
    pub c: F::Elem,
    pub g: SparseForm<F>,
}

/// Writes a binary form of even degree as `c·g²`.
///
/// With `f = t^m · Σ a_{m+i} s^{2d−m−i} t^i` the power series root of
/// `Σ (a_{m+i}/a_m) u^i` is truncated at degree `d − m/2` and squared back.
pub fn binary_square_root<F: Field>(f: &SparseForm<F>) -> Result<SquareRoot<F>> {
    let k = f.field();
    if f.num_vars() != 2 {
        return Err(Error::DimensionMismatch("binary form expected".into()));
    }
    if f.degree() % 2 == 1 {
        return Err(Error::OddDegree(f.degree()));
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if k.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    let a = f.binary_coeffs();
    let d = f.degree() as usize / 2;
    let m = a.iter().position(|x| !k.is_zero(x)).unwrap();
    if m % 2 == 1 {
        return Err(Error::NotASquare(format!("root t = 0 has odd multiplicity {m}")));
    }
    let j = m / 2;
    let c = a[m].clone();
    let c_inv = k.inv(&c).unwrap();
    let b: Vec<F::Elem> = a[m..].iter().map(|x| k.mul(x, &c_inv)).collect();
    let half = k.inv(&k.from_i64(2)).unwrap();
    let len = d - j + 1;
    let mut g = vec![k.one()];
    for n in 1..len {
        let mut s = b[n].clone();
        for i in 1..n {
            s = k.sub(&s, &k.mul(&g[i], &g[n - i]));
        }
        g.push(k.mul(&s, &half));
    }
    let series = UniPoly::new(k, g.clone());
    let squared = series.mul(&series);
    if squared != UniPoly::new(k, b) {
        return Err(Error::NotASquare("square of the truncated root differs from the form".into()));
    }
    let mut dense = vec![k.zero(); d + 1];
    for (i, gi) in g.into_iter().enumerate() {
        dense[j + i] = gi;
    }
    Ok(SquareRoot { c, g: SparseForm::from_binary_coeffs(k, &dense) })
}

/// Roots `(s:t)` of a nonzero binary form over a finite field, with
/// multiplicities, sorted by point.
pub fn binary_roots<F: Field>(g: &SparseForm<F>) -> Result<Vec<(ProjPoint<F>, usize)>> {
    let k = g.field();
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    // g(1, u) = Σ a_k u^k; (0:1) absorbs the missing top degree
    let a = g.binary_coeffs();
    let affine = UniPoly::new(k, a.clone());
    let mut out = Vec::new();
    for r in affine.roots()? {
        let mult = affine.root_multiplicity(&r);
        out.push((ProjPoint::new(k, vec![k.one(), r])?, mult));
    }
    let at_infinity = a.len() - 1 - affine.degree().unwrap_or(0);
    if at_infinity > 0 {
        out.push((ProjPoint::new(k, vec![k.zero(), k.one()])?, at_infinity));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Homogeneous resultant of two ternary forms with respect to `x_var`, as a
/// binary form of degree `deg F · deg G` in the two remaining variables
/// (kept in their original order).
///
/// Sylvester convention: the `deg G` rows of F come first, coefficients from
/// the highest power of `x_var`. For `F = z² − xy`, `G = z` this gives `−xy`.
///
/// Both forms must contain a pure power of `x_var`, so the formal degree is
/// attained on every line. The result is interpolated from Sylvester
/// determinants on the lines `(1, t)` for `t = 0, 1, …, deg F · deg G`.
pub fn resultant_eliminate<F: Field>(
    f: &SparseForm<F>,
    g: &SparseForm<F>,
    x_var: usize,
) -> Result<SparseForm<F>> {
    let k = f.field();
    if f.num_vars() != 3 || g.num_vars() != 3 || x_var > 2 {
        return Err(Error::DimensionMismatch("ternary forms and a variable index < 3".into()));
    }
    let (df, dg) = (f.degree() as usize, g.degree() as usize);
    let pure = |h: &SparseForm<F>, d: usize| {
        let mut e = vec![0u16; 3];
        e[x_var] = d as u16;
        !k.is_zero(&h.coeff(&e))
    };
    if df == 0 || dg == 0 || !pure(f, df) || !pure(g, dg) {
        return Err(Error::NotMonicInVariable { var: x_var });
    }
    let n = df * dg;
    if k.order().is_some_and(|q| q < n as u64 + 1) {
        return Err(Error::FieldTooSmall(format!(
            "need {} interpolation nodes; use a larger prime",
            n + 1
        )));
    }
    let others: Vec<usize> = (0..3).filter(|&v| v != x_var).collect();
    let xs: Vec<F::Elem> = (0..=n as i64).map(|t| k.from_i64(t)).collect();
    let ys: Vec<F::Elem> = xs
        .iter()
        .map(|t| {
            let fc = univariate_coeffs(f, x_var, &others, t);
            let gc = univariate_coeffs(g, x_var, &others, t);
            linalg::determinant(k, &sylvester(k, &fc, &gc))
        })
        .collect();
    let r = UniPoly::interpolate(k, &xs, &ys)?;
    let dense: Vec<F::Elem> =
        (0..=n).map(|i| r.coeffs().get(i).cloned().unwrap_or_else(|| k.zero())).collect();
    Ok(SparseForm::from_binary_coeffs(k, &dense))
}

/// Coefficients of `h` in `x_var`, highest power first, on the line where
/// the other two variables are `(1, t)`.
fn univariate_coeffs<F: Field>(
    h: &SparseForm<F>,
    x_var: usize,
    others: &[usize],
    t: &F::Elem,
) -> Vec<F::Elem> {
    let k = h.field();
    let d = h.degree() as usize;
    let mut out = vec![k.zero(); d + 1];
    for (m, c) in h.terms() {
        let e = m.exponents();
        let val = k.mul(c, &k.pow(t, e[others[1]] as u64));
        let slot = d - e[x_var] as usize;
        out[slot] = k.add(&out[slot], &val);
    }
    out
}

fn sylvester<F: Field>(k: &F, f: &[F::Elem], g: &[F::Elem]) -> linalg::Matrix<F::Elem> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut r = vec![k.zero(); size];
        r[shift..shift + m + 1].clone_from_slice(f);
        rows.push(r);
    }
    for shift in 0..m {
        let mut r = vec![k.zero(); size];
        r[shift..shift + n + 1].clone_from_slice(g);
        rows.push(r);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{PrimeField, QuadExt, Rationals};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn binary<F: Field>(k: &F, c: &[i64]) -> SparseForm<F> {
        SparseForm::from_binary_coeffs(k, &c.iter().map(|&x| k.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn square_of_sum_of_squares() {
        let q = Rationals;
        let g = binary(&q, &[1, 0, 1]);
        let r = binary_square_root(&g.mul(&g)).unwrap();
        assert_eq!(r.c, q.one());
        assert_eq!(r.g, g);
    }

    #[test]
    fn distinct_multiplicities_are_not_squares() {
        let q = Rationals;
        assert!(matches!(binary_square_root(&binary(&q, &[1, 1, 0, 0, 0])), Err(Error::NotASquare(_))));
        assert_eq!(binary_square_root(&binary(&q, &[1, 1, 0, 0])), Err(Error::OddDegree(3)));
        assert_eq!(binary_square_root(&SparseForm::zero(&q, 2, 4)), Err(Error::ZeroForm));
    }

    #[test]
    fn scaled_square_over_prime_field() {
        let k = PrimeField::new(101).unwrap();
        let g = binary(&k, &[1, 1, 1]);
        let r = binary_square_root(&g.mul(&g).scale(&3)).unwrap();
        assert_eq!((r.c, r.g), (3, g));
    }

    #[test]
    fn leading_t_power_is_handled() {
        let k = PrimeField::new(101).unwrap();
        // s²t(s + 2t), squared: t-adic order 2
        let g = binary(&k, &[0, 1, 2, 0]).mul(&binary(&k, &[1, 0]));
        let f = g.mul(&g).scale(&7);
        let r = binary_square_root(&f).unwrap();
        assert_eq!(r.g.mul(&r.g).scale(&r.c), f);
    }

    fn ternary<F: Field>(k: &F, d: u32, terms: &[([u16; 3], i64)]) -> SparseForm<F> {
        SparseForm::from_terms(k, 3, d, terms.iter().map(|(e, c)| (e.to_vec(), k.from_i64(*c)))).unwrap()
    }

    #[test]
    fn conic_against_line_hand_resultant() {
        let k = PrimeField::new(101).unwrap();
        let f = ternary(&k, 2, &[([0, 0, 2], 1), ([1, 1, 0], -1)]);
        let g = ternary(&k, 1, &[([0, 0, 1], 1)]);
        let r = resultant_eliminate(&f, &g, 2).unwrap();
        assert_eq!(r, binary(&k, &[0, -1, 0]));
    }

    #[test]
    fn variable_free_forms_are_rejected() {
        let k = PrimeField::new(101).unwrap();
        let x = ternary(&k, 1, &[([1, 0, 0], 1)]);
        let y = ternary(&k, 1, &[([0, 1, 0], 1)]);
        assert_eq!(resultant_eliminate(&x, &y, 2), Err(Error::NotMonicInVariable { var: 2 }));
    }

    #[test]
    fn small_field_is_reported() {
        let k = PrimeField::new(7).unwrap();
        let f = ternary(&k, 4, &[([0, 0, 4], 1), ([4, 0, 0], 1)]);
        assert!(matches!(resultant_eliminate(&f, &f, 2), Err(Error::FieldTooSmall(_))));
    }

    fn random_ternary(k: &PrimeField, d: u32, rng: &mut impl rand::Rng) -> SparseForm<PrimeField> {
        let ms = crate::exact::form::monomials(3, d);
        let mut f = SparseForm::from_terms(k, 3, d, ms.iter().map(|m| (m.exponents().to_vec(), k.random(rng)))).unwrap();
        // guarantee the pure power of z
        let mut e = vec![0u16; 3];
        e[2] = d as u16;
        if f.coeff(&e) == 0 {
            f = f.add(&SparseForm::from_terms(k, 3, d, [(e, 1)]).unwrap());
        }
        f
    }

    #[test]
    fn vanishing_detects_common_roots_on_lines() {
        // Res(x=1, y=t) = 0 iff F(1,t,z) and G(1,t,z) share a root z in the
        // algebraic closure; gcd decides it exactly, and any common root must
        // already appear over F_{p²} for quadratic factors.
        let k = PrimeField::new(101).unwrap();
        let ext = QuadExt::over(k);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for instance in 0..50 {
            let (df, dg) = (1 + instance % 3, 1 + (instance / 3) % 2);
            let f = random_ternary(&k, df as u32, &mut rng);
            let mut g = random_ternary(&k, dg as u32, &mut rng);
            let mut f = f;
            if instance % 2 == 0 {
                // plant a shared root on the line y = 5x
                let z0 = k.random(&mut rng);
                let fz = f.eval(&[1, 5, z0]);
                let gz = g.eval(&[1, 5, z0]);
                f = f.sub(&ternary(&k, df as u32, &[([df as u16, 0, 0], fz as i64)]));
                g = g.sub(&ternary(&k, dg as u32, &[([dg as u16, 0, 0], gz as i64)]));
            }
            let r = resultant_eliminate(&f, &g, 2).unwrap();
            for t in [0u64, 5, 17, 42] {
                let fu = UniPoly::new(&k, univariate_coeffs(&f, 2, &[0, 1], &t).into_iter().rev().collect());
                let gu = UniPoly::new(&k, univariate_coeffs(&g, 2, &[0, 1], &t).into_iter().rev().collect());
                let shares = fu.gcd(&gu).degree().unwrap_or(0) > 0;
                assert_eq!(r.eval(&[1, t]) == 0, shares, "instance {instance} t {t}");
                // brute force over F_{p²}: a shared linear or quadratic factor has a root there
                let fe = UniPoly::new(&ext, fu.coeffs().iter().map(|c| k.embed(&ext, c)).collect());
                let ge = UniPoly::new(&ext, gu.coeffs().iter().map(|c| k.embed(&ext, c)).collect());
                let root_found = fe.roots().unwrap().iter().any(|z| ext.is_zero(&ge.eval(z)));
                if root_found {
                    assert_eq!(r.eval(&[1, t]), 0);
                }
            }
        }
    }

    #[test]
    fn binary_roots_with_multiplicity() {
        let k = PrimeField::new(101).unwrap();
        // t²(s − 3t) has the double root (1:0) and the root (3:1) = (1:34);
        // s² vanishes only at (0:1), twice
        let g = binary(&k, &[0, 0, 1, -3]);
        let roots = binary_roots(&g).unwrap();
        let pts: Vec<(Vec<u64>, usize)> = roots.iter().map(|(p, m)| (p.coords().to_vec(), *m)).collect();
        assert_eq!(pts, vec![(vec![1, 0], 2), (vec![1, 34], 1)]);
        let h = binary(&k, &[1, 0, 0]);
        let pts: Vec<(Vec<u64>, usize)> =
            binary_roots(&h).unwrap().iter().map(|(p, m)| (p.coords().to_vec(), *m)).collect();
        assert_eq!(pts, vec![(vec![0, 1], 2)]);
    }

    proptest! {
        #[test]
        fn square_root_reconstructs(g in proptest::collection::vec(0u64..101, 5), c in 1u64..101) {
            let k = PrimeField::new(101).unwrap();
            let g = SparseForm::from_binary_coeffs(&k, &g);
            prop_assume!(!g.is_zero());
            let f = g.mul(&g).scale(&c);
            let r = binary_square_root(&f).unwrap();
            prop_assert_eq!(r.g.mul(&r.g).scale(&r.c), f);
        }
    }
}
