//! Points of projective space over an exact field.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::exact::field::{Field, FieldScalar};
use crate::exact::linalg::{self, Matrix};

/// A point of Pⁿ, normalized so its first nonzero coordinate is 1.
#[derive(Clone, Debug)]
pub struct ProjPoint<F: Field> {
    coords: Vec<F::Elem>,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(field: &F, mut coords: Vec<F::Elem>) -> Result<Self> {
        let Some(lead) = coords.iter().position(|c| !field.is_zero(c)) else {
            return Err(Error::ZeroPoint);
        };
        let inv = field.inv(&coords[lead]).unwrap();
        for c in coords.iter_mut().skip(lead) {
            *c = field.mul(c, &inv);
        }
        Ok(Self { coords })
    }

    pub fn from_i64(field: &F, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }

    /// Dimension `n` of the ambient Pⁿ.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn to_scalars(&self, field: &F) -> Vec<FieldScalar> {
        self.coords.iter().map(|c| field.to_scalar(c)).collect()
    }

    pub fn to_strings(&self, field: &F) -> Vec<String> {
        self.coords.iter().map(|c| field.to_scalar(c).to_string()).collect()
    }

    pub fn lift(&self, field: &F, ext: &F::Ext) -> ProjPoint<F::Ext> {
        ProjPoint { coords: self.coords.iter().map(|c| field.embed(ext, c)).collect() }
    }

    pub fn display<'a>(&'a self, field: &'a F) -> impl fmt::Display + 'a {
        DisplayPoint { point: self, field }
    }
}

struct DisplayPoint<'a, F: Field> {
    point: &'a ProjPoint<F>,
    field: &'a F,
}

impl<F: Field> fmt::Display for DisplayPoint<'_, F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "({})", self.point.to_strings(self.field).join(":"))
    }
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> Eq for ProjPoint<F> {}

impl<F: Field> Hash for ProjPoint<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl<F: Field> Ord for ProjPoint<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl<F: Field> PartialOrd for ProjPoint<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Projective dimension of the span: rank of the coordinate matrix minus one.
pub fn span_dimension<F: Field>(field: &F, points: &[ProjPoint<F>]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyPointList)?;
    let n = first.coords.len();
    if points.iter().any(|p| p.coords.len() != n) {
        return Err(Error::DimensionMismatch("points in different ambient spaces".into()));
    }
    let rows: Matrix<F::Elem> = points.iter().map(|p| p.coords.clone()).collect();
    Ok(linalg::rank(field, &rows, n) - 1)
}

/// Number of points of Pⁿ(F_q).
pub fn projective_count(q: u64, n: usize) -> u64 {
    (0..=n as u32).map(|k| q.pow(k)).sum()
}

/// The `index`-th point of Pⁿ(F_q) in canonical order: points with leading
/// coordinate at position 0 first, remaining coordinates in field order.
pub fn projective_point<F: Field>(field: &F, n: usize, mut index: u64) -> ProjPoint<F> {
    let q = field.order().expect("finite field");
    let mut lead = 0;
    loop {
        let block = q.pow((n - lead) as u32);
        if index < block {
            break;
        }
        index -= block;
        lead += 1;
    }
    let mut coords = vec![field.zero(); n + 1];
    coords[lead] = field.one();
    for pos in (lead + 1..=n).rev() {
        coords[pos] = field.element(index % q);
        index /= q;
    }
    ProjPoint { coords }
}

/// All points of Pⁿ over a finite field, in canonical order.
pub fn projective_points<F: Field>(
    field: &F,
    n: usize,
) -> Result<impl Iterator<Item = ProjPoint<F>> + '_> {
    let q = field.order().ok_or(Error::NotEnumerable)?;
    Ok((0..projective_count(q, n)).map(move |i| projective_point(field, n, i)))
}

/// A matrix `M` with `M·src[k] ∝ dst[k]` for all `k`, if one exists and is
/// invertible.
pub fn projective_equivalence<F: Field>(
    field: &F,
    src: &[ProjPoint<F>],
    dst: &[ProjPoint<F>],
) -> Option<Matrix<F::Elem>> {
    let f = field;
    if src.len() != dst.len() || src.is_empty() {
        return None;
    }
    let n = src[0].coords.len();
    // unknowns M[r][c] at index r*n + c; (Mv)_r w_s − (Mv)_s w_r = 0
    let mut rows = Vec::new();
    for (v, w) in src.iter().zip(dst) {
        for r in 0..n {
            for s in r + 1..n {
                let mut row = vec![f.zero(); n * n];
                for c in 0..n {
                    row[r * n + c] = f.mul(&v.coords[c], &w.coords[s]);
                    row[s * n + c] = f.neg(&f.mul(&v.coords[c], &w.coords[r]));
                }
                rows.push(row);
            }
        }
    }
    let (_, kernel) = linalg::rank_and_kernel(f, &rows, n * n);
    let mut candidates = kernel.clone();
    if kernel.len() > 1 {
        let sum = kernel.iter().fold(vec![f.zero(); n * n], |acc, k| {
            acc.iter().zip(k).map(|(a, b)| f.add(a, b)).collect()
        });
        candidates.push(sum);
    }
    candidates.into_iter().find_map(|k| {
        let m: Matrix<F::Elem> = k.chunks(n).map(<[_]>::to_vec).collect();
        linalg::inverse(f, &m)?;
        let maps_all = src.iter().zip(dst).all(|(v, w)| {
            ProjPoint::new(f, linalg::mat_vec(f, &m, &v.coords)).is_ok_and(|img| img == *w)
        });
        maps_all.then_some(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::PrimeField;

    #[test]
    fn normalization_makes_equality_canonical() {
        let f = PrimeField::new(7).unwrap();
        let a = ProjPoint::from_i64(&f, &[0, 3, 6]).unwrap();
        let b = ProjPoint::from_i64(&f, &[0, 1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords(), &[0, 1, 2]);
        assert_eq!(ProjPoint::from_i64(&f, &[0, 0]), Err(Error::ZeroPoint));
    }

    #[test]
    fn span_dimensions() {
        let f = PrimeField::new(101).unwrap();
        let p = |c: &[i64]| ProjPoint::from_i64(&f, c).unwrap();
        assert_eq!(span_dimension(&f, &[p(&[1, 0, 0, 0])]).unwrap(), 0);
        let coplanar = [p(&[1, 1, 1, 1]), p(&[1, 1, -1, 1]), p(&[1, -1, 1, 1]), p(&[1, -1, -1, 1])];
        assert_eq!(span_dimension(&f, &coplanar).unwrap(), 2);
        let general = [p(&[1, 0, 0, 0]), p(&[0, 1, 0, 0]), p(&[0, 0, 1, 0]), p(&[1, 1, 1, 1])];
        assert_eq!(span_dimension(&f, &general).unwrap(), 3);
        assert_eq!(span_dimension::<PrimeField>(&f, &[]), Err(Error::EmptyPointList));
    }

    #[test]
    fn enumeration_covers_projective_plane_once() {
        let f = PrimeField::new(5).unwrap();
        let pts: Vec<_> = projective_points(&f, 2).unwrap().collect();
        assert_eq!(pts.len(), 31);
        let distinct: std::collections::BTreeSet<_> = pts.iter().cloned().collect();
        assert_eq!(distinct.len(), 31);
    }

    #[test]
    fn equivalence_recovers_a_known_transform() {
        let f = PrimeField::new(101).unwrap();
        let m = vec![vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]];
        let src: Vec<_> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]
            .iter()
            .map(|c| ProjPoint::from_i64(&f, c).unwrap())
            .collect();
        let dst: Vec<_> = src
            .iter()
            .map(|p| ProjPoint::new(&f, linalg::mat_vec(&f, &m, p.coords())).unwrap())
            .collect();
        assert!(projective_equivalence(&f, &src, &dst).is_some());
        let mut wrong = dst.clone();
        wrong[4] = ProjPoint::from_i64(&f, &[1, 0, 1]).unwrap();
        assert!(projective_equivalence(&f, &src, &wrong).is_none());
    }
}
