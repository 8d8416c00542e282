//! Dense exact linear algebra on row-major `Vec<Vec<_>>` matrices.

use crate::error::{Error, Result};
use crate::exact::field::{Field, FieldKind, FieldScalar, PrimeField, QuadExt, Rationals};
use crate::exact::form::SparseForm;

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<F: Field>(field: &F, m: &[Vec<F::Elem>], ncols: usize) -> (Matrix<F::Elem>, Vec<usize>) {
    let f = field;
    let mut a: Matrix<F::Elem> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !f.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(row, p);
        let inv = f.inv(&a[row][col]).unwrap();
        for x in a[row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = a[row].clone();
        for (r, other) in a.iter_mut().enumerate() {
            if r == row || f.is_zero(&other[col]) {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x = f.sub(x, &f.mul(&factor, p));
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank<F: Field>(field: &F, m: &[Vec<F::Elem>], ncols: usize) -> usize {
    rref(field, m, ncols).1.len()
}

/// Rank and a kernel basis in reduced echelon form.
///
/// `rank + basis.len() == ncols` and `m · v = 0` for every basis vector `v`.
pub fn rank_and_kernel<F: Field>(
    field: &F,
    m: &[Vec<F::Elem>],
    ncols: usize,
) -> (usize, Matrix<F::Elem>) {
    let f = field;
    let (r, pivots) = rref(f, m, ncols);
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = f.neg(&row[free]);
        }
        kernel.push(v);
    }
    let (kernel, _) = rref(f, &kernel, ncols);
    (pivots.len(), kernel)
}

/// [`rank_and_kernel`] for tagged scalars; all entries must share one field.
pub fn rank_and_kernel_scalars(
    m: &[Vec<FieldScalar>],
    ncols: usize,
) -> Result<(usize, Matrix<FieldScalar>)> {
    let mut kinds = m.iter().flatten().map(FieldScalar::kind);
    let Some(kind) = kinds.next() else {
        return Ok((0, (0..ncols).map(|i| unit_scalar_row(ncols, i)).collect()));
    };
    if kinds.any(|k| k != kind) {
        return Err(Error::MixedFields);
    }
    if m.iter().any(|row| row.len() != ncols) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }
    fn go<F: Field>(f: &F, m: &[Vec<FieldScalar>], ncols: usize) -> Result<(usize, Matrix<FieldScalar>)> {
        let conv: Matrix<F::Elem> = m
            .iter()
            .map(|row| row.iter().map(|x| f.parse(&x.to_string())).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let (r, k) = rank_and_kernel(f, &conv, ncols);
        Ok((r, k.iter().map(|v| v.iter().map(|x| f.to_scalar(x)).collect()).collect()))
    }
    match kind {
        FieldKind::Rational => go(&Rationals, m, ncols),
        FieldKind::Prime { p } => go(&PrimeField::new(p)?, m, ncols),
        FieldKind::Quad { p } => go(&QuadExt::new(p)?, m, ncols),
    }
}

fn unit_scalar_row(n: usize, i: usize) -> Vec<FieldScalar> {
    use num_rational::BigRational;
    (0..n)
        .map(|j| FieldScalar::Rational(BigRational::from_integer((i == j).into())))
        .collect()
}

pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let f = field;
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = f.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !f.is_zero(&a[r][col])) else {
            return f.zero();
        };
        if p != col {
            a.swap(p, col);
            det = f.neg(&det);
        }
        det = f.mul(&det, &a[col][col]);
        let inv = f.inv(&a[col][col]).unwrap();
        for r in col + 1..n {
            if f.is_zero(&a[r][col]) {
                continue;
            }
            let factor = f.mul(&a[r][col], &inv);
            for c in col..n {
                let t = f.mul(&factor, &a[col][c]);
                a[r][c] = f.sub(&a[r][c], &t);
            }
        }
    }
    det
}

pub fn inverse<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Option<Matrix<F::Elem>> {
    let f = field;
    let n = m.len();
    let aug: Matrix<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(f, &aug, n);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec<F: Field>(field: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter().map(|row| dot(field, row, v)).collect()
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// `uᵀ M v`.
pub fn bilinear<F: Field>(field: &F, m: &[Vec<F::Elem>], u: &[F::Elem], v: &[F::Elem]) -> F::Elem {
    dot(field, u, &mat_vec(field, m, v))
}

pub fn is_symmetric<F: Field>(m: &[Vec<F::Elem>]) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// `Σ coeffs[k] · mats[k]`.
pub fn combine<F: Field>(field: &F, mats: &[&Matrix<F::Elem>], coeffs: &[F::Elem]) -> Matrix<F::Elem> {
    let n = mats[0].len();
    let m = mats[0].first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    mats.iter().zip(coeffs).fold(field.zero(), |acc, (a, c)| {
                        field.add(&acc, &field.mul(c, &a[i][j]))
                    })
                })
                .collect()
        })
        .collect()
}

/// `det(x·A + y·B + z·C)` as a ternary form of degree `n`.
///
/// Laplace expansion over column subsets: `D[S]` is the minor on the last
/// `|S|` rows and the columns in `S`.
pub fn det_linear_symmetric<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
    c: &[Vec<F::Elem>],
) -> Result<SparseForm<F>> {
    let f = field;
    let n = a.len();
    if b.len() != n || c.len() != n {
        return Err(Error::DimensionMismatch("matrices of different sizes".into()));
    }
    if !(is_symmetric::<F>(a) && is_symmetric::<F>(b) && is_symmetric::<F>(c)) {
        return Err(Error::NotSymmetric);
    }
    if f.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    if n > 20 {
        return Err(Error::DimensionMismatch(format!("{n}x{n} is too large for subset expansion")));
    }
    let entry = |i: usize, j: usize| {
        SparseForm::linear(f, &[a[i][j].clone(), b[i][j].clone(), c[i][j].clone()])
    };
    let full = (1usize << n) - 1;
    let mut minors: Vec<Option<SparseForm<F>>> = vec![None; full + 1];
    minors[0] = Some(SparseForm::constant(f, 3, f.one()));
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = SparseForm::zero(f, 3, k as u32);
        for col in (0..n).filter(|&j| mask & (1 << j) != 0) {
            let rest = mask & !(1 << col);
            let sub = minors[rest].as_ref().unwrap();
            if sub.is_zero() {
                continue;
            }
            let term = entry(row, col).mul(sub);
            let position = (rest & ((1 << col) - 1)).count_ones();
            acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[full].take().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::form::SparseForm;

    fn m(f: &PrimeField, rows: &[&[i64]]) -> Matrix<u64> {
        rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank_and_kernel(&f, &m(&f, &[&[1, 0], &[0, 1]]), 2), (2, vec![]));
    }

    #[test]
    fn single_relation_kernel_is_echelon() {
        let f = PrimeField::new(7).unwrap();
        let (r, k) = rank_and_kernel(&f, &m(&f, &[&[1, 1]]), 2);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![1, 6]]);
    }

    #[test]
    fn scalar_entry_point_rejects_mixed_fields() {
        let a = FieldScalar::Prime { p: 7, value: 1 };
        let b = FieldScalar::Prime { p: 11, value: 1 };
        assert_eq!(rank_and_kernel_scalars(&[vec![a.clone(), b]], 2), Err(Error::MixedFields));
        let (r, k) = rank_and_kernel_scalars(&[vec![a.clone(), a]], 2).unwrap();
        assert_eq!(r, 1);
        assert_eq!(k[0][1].to_string(), "6");
    }

    #[test]
    fn determinant_and_inverse_agree() {
        let f = PrimeField::new(101).unwrap();
        let a = m(&f, &[&[2, 1, 0], &[1, 3, 4], &[0, 4, 5]]);
        // 2(15 − 16) − 1(5 − 0) = −7
        assert_eq!(determinant(&f, &a), f.from_i64(-7));
        let inv = inverse(&f, &a).unwrap();
        for (i, row) in a.iter().enumerate() {
            let col: Vec<u64> = inv.iter().map(|r| r[i]).collect();
            let _ = row;
            let e = mat_vec(&f, &a, &col);
            for (j, x) in e.iter().enumerate() {
                assert_eq!(*x, u64::from(i == j));
            }
        }
    }

    #[test]
    fn diagonal_net_determinant() {
        let f = Rationals;
        let diag = |d: [i64; 4]| -> Matrix<_> {
            (0..4)
                .map(|i| (0..4).map(|j| f.from_i64(if i == j { d[i] } else { 0 })).collect())
                .collect()
        };
        let det = det_linear_symmetric(
            &f,
            &diag([1, 0, 0, -1]),
            &diag([0, 1, 0, -1]),
            &diag([0, 0, 1, -1]),
        )
        .unwrap();
        let x = SparseForm::var(&f, 3, 0);
        let y = SparseForm::var(&f, 3, 1);
        let z = SparseForm::var(&f, 3, 2);
        let expected = x.mul(&y).mul(&z).mul(&x.add(&y).add(&z)).neg();
        assert_eq!(det, expected);
    }

    #[test]
    fn zero_and_one_by_one_nets() {
        let f = PrimeField::new(11).unwrap();
        let z = vec![vec![0u64; 3]; 3];
        assert!(det_linear_symmetric(&f, &z, &z, &z).unwrap().is_zero());
        let d = det_linear_symmetric(&f, &[vec![2]], &[vec![3]], &[vec![5]]).unwrap();
        assert_eq!(d, SparseForm::linear(&f, &[2, 3, 5]));
        let bad = vec![vec![0, 1], vec![0, 0]];
        let ok = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(det_linear_symmetric(&f, &bad, &ok, &ok), Err(Error::NotSymmetric));
    }

    #[test]
    fn determinant_expansion_matches_pointwise_determinants() {
        use rand::SeedableRng;
        let f = PrimeField::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let mut sym = || -> Matrix<u64> {
            let mut a = vec![vec![0; 4]; 4];
            for i in 0..4 {
                for j in i..4 {
                    let v = f.random(&mut rng);
                    a[i][j] = v;
                    a[j][i] = v;
                }
            }
            a
        };
        let (a, b, c) = (sym(), sym(), sym());
        let det = det_linear_symmetric(&f, &a, &b, &c).unwrap();
        for pt in [[1u64, 2, 3], [0, 0, 1], [5, 99, 7]] {
            let q = combine(&f, &[&a, &b, &c], &pt);
            assert_eq!(det.eval(&pt), determinant(&f, &q));
        }
    }
}
