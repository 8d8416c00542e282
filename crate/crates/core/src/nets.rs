//! Nets of quadrics in P³, their base octads, Hessian quartics, bitangents
//! and the Steinerian map.
//!
//! Octad indices are 0-based throughout: `x_1, …, x_8` are `points()[0..8]`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::elimination::{binary_roots, binary_square_root, SquareRoot};
use crate::exact::field::Field;
use crate::exact::form::{monomials, SparseForm};
use crate::exact::linalg::{self, Matrix};
use crate::exact::poly::UniPoly;
use crate::exact::projective::{projective_count, projective_point, span_dimension, ProjPoint};

/// `Q_{(x:y:z)} = x·A + y·B + z·C` with `A, B, C` symmetric and independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricNet<F: Field> {
    field: F,
    a: Matrix<F::Elem>,
    b: Matrix<F::Elem>,
    c: Matrix<F::Elem>,
}

impl<F: Field> QuadricNet<F> {
    pub fn new(field: &F, a: Matrix<F::Elem>, b: Matrix<F::Elem>, c: Matrix<F::Elem>) -> Result<Self> {
        for m in [&a, &b, &c] {
            if m.len() != 4 || m.iter().any(|r| r.len() != 4) {
                return Err(Error::DimensionMismatch("net matrices must be 4x4".into()));
            }
            if !linalg::is_symmetric::<F>(m) {
                return Err(Error::NotSymmetric);
            }
        }
        let flat: Matrix<F::Elem> = [&a, &b, &c].iter().map(|m| m.concat()).collect();
        if linalg::rank(field, &flat, 16) < 3 {
            return Err(Error::DegenerateNet("matrices are linearly dependent".into()));
        }
        Ok(Self { field: field.clone(), a, b, c })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn matrices(&self) -> [&Matrix<F::Elem>; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// The quadric `Q_u` for a point `u` of the net plane.
    pub fn quadric_at(&self, u: &[F::Elem]) -> Matrix<F::Elem> {
        linalg::combine(&self.field, &[&self.a, &self.b, &self.c], u)
    }

    pub fn lift(&self) -> Option<QuadricNet<F::Ext>> {
        let ext = self.field.extension()?;
        let lift = |m: &Matrix<F::Elem>| -> Matrix<<F::Ext as Field>::Elem> {
            m.iter().map(|r| r.iter().map(|x| self.field.embed(&ext, x)).collect()).collect()
        };
        Some(QuadricNet { a: lift(&self.a), b: lift(&self.b), c: lift(&self.c), field: ext })
    }

    /// Values `(vᵀAv, vᵀBv, vᵀCv)`.
    pub fn evaluate(&self, v: &[F::Elem]) -> [F::Elem; 3] {
        let f = &self.field;
        [
            linalg::bilinear(f, &self.a, v, v),
            linalg::bilinear(f, &self.b, v, v),
            linalg::bilinear(f, &self.c, v, v),
        ]
    }

    /// Polarization `(uᵀAv, uᵀBv, uᵀCv)`.
    pub fn polar(&self, u: &[F::Elem], v: &[F::Elem]) -> [F::Elem; 3] {
        let f = &self.field;
        [
            linalg::bilinear(f, &self.a, u, v),
            linalg::bilinear(f, &self.b, u, v),
            linalg::bilinear(f, &self.c, u, v),
        ]
    }
}

/// Eight distinct ordered points of P³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octad<F: Field> {
    field: F,
    points: Vec<ProjPoint<F>>,
}

impl<F: Field> Octad<F> {
    pub fn new(field: &F, points: Vec<ProjPoint<F>>) -> Result<Self> {
        if points.len() != 8 {
            return Err(Error::DimensionMismatch(format!("an octad has 8 points, got {}", points.len())));
        }
        if points.iter().any(|p| p.dim() != 3) {
            return Err(Error::DimensionMismatch("octad points must lie in P3".into()));
        }
        for i in 0..8 {
            for j in i + 1..8 {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        Ok(Self { field: field.clone(), points })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint<F>] {
        &self.points
    }

    /// Equality as unordered sets.
    pub fn same_points(&self, other: &Self) -> bool {
        let mut a = self.points.clone();
        let mut b = other.points.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Second Veronese image in the monomial order x², xy, xz, xw, y², …, w².
pub fn veronese_row<F: Field>(field: &F, p: &ProjPoint<F>) -> Vec<F::Elem> {
    let f = field;
    let n = p.coords().len();
    monomials(n, 2)
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .zip(p.coords())
                .fold(f.one(), |acc, (&e, x)| if e == 0 { acc } else { f.mul(&acc, &f.pow(x, e as u64)) })
        })
        .collect()
}

fn veronese_matrix<F: Field>(field: &F, points: &[ProjPoint<F>]) -> Matrix<F::Elem> {
    points.iter().map(|p| veronese_row(field, p)).collect()
}

/// Rank of the second-Veronese matrix; 7 certifies a self-associated octad.
pub fn self_association_rank<F: Field>(field: &F, points: &[ProjPoint<F>]) -> usize {
    linalg::rank(field, &veronese_matrix(field, points), 10)
}

fn symmetric_from_veronese<F: Field>(field: &F, c: &[F::Elem]) -> Matrix<F::Elem> {
    let f = field;
    let half = f.inv(&f.from_i64(2)).expect("characteristic is not 2");
    let mut m = vec![vec![f.zero(); 4]; 4];
    for (mono, coeff) in monomials(4, 2).iter().zip(c) {
        let idx: Vec<usize> = mono
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m[i][i] = coeff.clone();
        } else {
            m[i][j] = f.mul(coeff, &half);
            m[j][i] = m[i][j].clone();
        }
    }
    m
}

/// The net of quadrics through seven points in general position.
pub fn net_through<F: Field>(field: &F, points7: &[ProjPoint<F>]) -> Result<QuadricNet<F>> {
    if points7.len() != 7 || points7.iter().any(|p| p.dim() != 3) {
        return Err(Error::DimensionMismatch("seven points of P3 expected".into()));
    }
    let (rank, kernel) = linalg::rank_and_kernel(field, &veronese_matrix(field, points7), 10);
    if rank < 7 {
        return Err(Error::DegenerateConfiguration(format!(
            "Veronese rank {rank} < 7: the quadrics through the points form more than a net"
        )));
    }
    let mut mats = kernel.iter().map(|c| symmetric_from_veronese(field, c));
    let (a, b, c) = (mats.next().unwrap(), mats.next().unwrap(), mats.next().unwrap());
    QuadricNet::new(field, a, b, c)
}

/// Whether the three quadrics have independent differentials at `v`.
fn is_simple_point<F: Field>(net: &QuadricNet<F>, v: &[F::Elem]) -> bool {
    let f = &net.field;
    let rows: Matrix<F::Elem> = net.matrices().iter().map(|m| linalg::mat_vec(f, m, v)).collect();
    linalg::rank(f, &rows, 4) == 3
}

/// All points of P³ over the (finite) field of the net lying on every
/// quadric; an [`Octad`] when there are exactly eight, all simple.
///
/// Scans P² for `(x:y:z)` and solves each quadric as a quadratic in `w`.
pub fn base_locus<F: Field>(net: &QuadricNet<F>) -> Result<Octad<F>> {
    let f = &net.field;
    let q = f.order().ok_or(Error::NotEnumerable)?;
    let mats = net.matrices();
    let fiber = |idx: u64| -> Result<Vec<ProjPoint<F>>> {
        let head = projective_point(f, 2, idx);
        let v = head.coords();
        let mut common: Option<UniPoly<F>> = None;
        for m in mats {
            // Q(v, w) = m33 w² + 2(Σ m_i3 v_i) w + vᵀ m' v
            let lin = (0..3).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&m[i][3], &v[i])));
            let quad = (0..3).fold(f.zero(), |acc, i| {
                (0..3).fold(acc, |acc, j| f.add(&acc, &f.mul(&m[i][j], &f.mul(&v[i], &v[j]))))
            });
            let poly = UniPoly::new(f, vec![quad, f.add(&lin, &lin), m[3][3].clone()]);
            common = Some(match common {
                None => poly,
                Some(g) => g.gcd(&poly),
            });
        }
        let g = common.unwrap();
        if g.is_zero() {
            return Err(Error::DegenerateNet(format!(
                "the line through {} and (0:0:0:1) lies in the base locus",
                head.display(f)
            )));
        }
        g.roots()?
            .into_iter()
            .map(|w| ProjPoint::new(f, vec![v[0].clone(), v[1].clone(), v[2].clone(), w]))
            .collect()
    };
    let chunks: Vec<Result<Vec<ProjPoint<F>>>> =
        (0..projective_count(q, 2)).into_par_iter().map(fiber).collect();
    let mut points = Vec::new();
    for c in chunks {
        points.extend(c?);
    }
    let apex = vec![f.zero(), f.zero(), f.zero(), f.one()];
    if net.evaluate(&apex).iter().all(|x| f.is_zero(x)) {
        points.push(ProjPoint::new(f, apex)?);
    }
    points.sort();
    if let Some(p) = points.iter().find(|p| !is_simple_point(net, p.coords())) {
        return Err(Error::DegenerateNet(format!("base point {} is not simple", p.display(f))));
    }
    match points.len() {
        8 => Octad::new(f, points),
        n if n < 8 => Err(Error::PartialLocus(points.iter().map(|p| p.to_strings(f)).collect())),
        n => Err(Error::DegenerateNet(format!("{n} base points"))),
    }
}

/// The base point of the net through seven points that is not among them.
pub fn eighth_point<F: Field>(field: &F, points7: &[ProjPoint<F>]) -> Result<ProjPoint<F>> {
    let net = net_through(field, points7)?;
    let octad = base_locus(&net)?;
    let mut extra = octad.points.into_iter().filter(|p| !points7.contains(p));
    match (extra.next(), extra.next()) {
        (Some(p), None) => Ok(p),
        _ => Err(Error::DegenerateConfiguration("input points are not base points of their net".into())),
    }
}

/// Octad whose first seven points are the input, completed by the net.
pub fn complete_octad<F: Field>(field: &F, points7: &[ProjPoint<F>]) -> Result<Octad<F>> {
    let eighth = eighth_point(field, points7)?;
    let mut pts = points7.to_vec();
    pts.push(eighth);
    Octad::new(field, pts)
}

/// `det(xA + yB + zC)`, unnormalized.
pub fn hessian_quartic<F: Field>(net: &QuadricNet<F>) -> Result<SparseForm<F>> {
    let h = linalg::det_linear_symmetric(&net.field, &net.a, &net.b, &net.c)?;
    if h.is_zero() {
        return Err(Error::DegenerateNet("every quadric of the net is singular".into()));
    }
    Ok(h)
}

/// True iff every four octad points span P³.
pub fn smoothness_certificate<F: Field>(octad: &Octad<F>) -> bool {
    let p = &octad.points;
    (0..8).all(|a| {
        (a + 1..8).all(|b| {
            (b + 1..8).all(|c| {
                (c + 1..8).all(|d| {
                    let quad = [p[a].clone(), p[b].clone(), p[c].clone(), p[d].clone()];
                    span_dimension(&octad.field, &quad) == Ok(3)
                })
            })
        })
    })
}

/// Two points spanning the plane line `a·x + b·y + c·z = 0`.
pub fn line_basis<F: Field>(field: &F, line: &ProjPoint<F>) -> [Vec<F::Elem>; 2] {
    let (_, k) = linalg::rank_and_kernel(field, &[line.coords().to_vec()], 3);
    [k[0].clone(), k[1].clone()]
}

/// A form restricted to the line `(s:t) ↦ s·p0 + t·p1`.
pub fn restrict_to_line<F: Field>(form: &SparseForm<F>, basis: &[Vec<F::Elem>; 2]) -> SparseForm<F> {
    let f = form.field();
    let images: Vec<SparseForm<F>> = (0..form.num_vars())
        .map(|i| SparseForm::linear(f, &[basis[0][i].clone(), basis[1][i].clone()]))
        .collect();
    form.substitute(&images)
}

/// Evidence that a line is bitangent to the Hessian.
#[derive(Clone, Debug)]
pub struct TangencyCertificate<F: Field> {
    /// The Hessian on the line, in the parameters `(s:t)` of [`line_basis`].
    pub restricted: SparseForm<F>,
    pub root: SquareRoot<F>,
    /// Contact points in the net plane over the quadratic extension; `None`
    /// when the field has no enumerable extension.
    pub contacts: Option<Vec<ProjPoint<F::Ext>>>,
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if i >= 8 || j >= 8 {
        return Err(Error::IndexOutOfRange(format!("octad indices {i}, {j} must be below 8")));
    }
    if i == j {
        return Err(Error::EqualIndices);
    }
    Ok(())
}

/// The line of quadrics containing the chord `x_i x_j`, with its
/// bitangency certificate.
pub fn bitangent_line<F: Field>(
    net: &QuadricNet<F>,
    octad: &Octad<F>,
    i: usize,
    j: usize,
) -> Result<(ProjPoint<F>, TangencyCertificate<F>)> {
    check_pair(i, j)?;
    let hessian = hessian_quartic(net)?;
    bitangent_with_hessian(net, &hessian, octad, i, j)
}

/// [`bitangent_line`] with a precomputed Hessian.
pub fn bitangent_with_hessian<F: Field>(
    net: &QuadricNet<F>,
    hessian: &SparseForm<F>,
    octad: &Octad<F>,
    i: usize,
    j: usize,
) -> Result<(ProjPoint<F>, TangencyCertificate<F>)> {
    check_pair(i, j)?;
    let f = &net.field;
    let coeffs = net.polar(octad.points[i].coords(), octad.points[j].coords());
    let line = ProjPoint::new(f, coeffs.to_vec())
        .map_err(|_| Error::DegenerateNet(format!("every quadric contains the chord x{i}x{j}")))?;
    let basis = line_basis(f, &line);
    let restricted = restrict_to_line(hessian, &basis);
    if restricted.is_zero() {
        return Err(Error::ComponentLine);
    }
    let root = binary_square_root(&restricted).map_err(|e| match e {
        Error::NotASquare(why) => Error::InvariantViolation(format!(
            "Hessian restricted to the line of x{i}x{j} is not a square: {why}"
        )),
        other => other,
    })?;
    let contacts = match f.extension() {
        Some(ext) if ext.order().is_some() => {
            let g = root.g.lift(&ext);
            let lifted = [0, 1].map(|r| basis[r].iter().map(|x| f.embed(&ext, x)).collect::<Vec<_>>());
            let pts = binary_roots(&g)?
                .into_iter()
                .map(|(st, _)| {
                    let (s, t) = (&st.coords()[0], &st.coords()[1]);
                    let coords = (0..3)
                        .map(|c| ext.add(&ext.mul(s, &lifted[0][c]), &ext.mul(t, &lifted[1][c])))
                        .collect();
                    ProjPoint::new(&ext, coords)
                })
                .collect::<Result<Vec<_>>>()?;
            Some(pts)
        }
        _ => None,
    };
    Ok((line, TangencyCertificate { restricted, root, contacts }))
}

/// The singular point of the rank-3 quadric `Q_u`.
pub fn steinerian_point<F: Field>(net: &QuadricNet<F>, u: &ProjPoint<F>) -> Result<ProjPoint<F>> {
    if u.dim() != 2 {
        return Err(Error::DimensionMismatch("net plane points have three coordinates".into()));
    }
    let q = net.quadric_at(u.coords());
    let (rank, kernel) = linalg::rank_and_kernel(&net.field, &q, 4);
    match rank {
        4 => Err(Error::NotOnHessian),
        3 => ProjPoint::new(&net.field, kernel[0].clone()),
        _ => Err(Error::CorankTwo),
    }
}

/// Whether the chord `x_i x_j` passes through the Steinerian images of the
/// contact points of the corresponding bitangent.
pub fn steinerian_secant_check<F: Field>(
    net: &QuadricNet<F>,
    octad: &Octad<F>,
    i: usize,
    j: usize,
) -> Result<bool> {
    let (_, cert) = bitangent_line(net, octad, i, j)?;
    secant_check_with(net, octad, i, j, &cert)
}

/// [`steinerian_secant_check`] reusing a certificate.
pub fn secant_check_with<F: Field>(
    net: &QuadricNet<F>,
    octad: &Octad<F>,
    i: usize,
    j: usize,
    cert: &TangencyCertificate<F>,
) -> Result<bool> {
    let f = &net.field;
    let contacts = cert
        .contacts
        .as_ref()
        .ok_or_else(|| Error::Precondition("contact points need an enumerable extension".into()))?;
    let ext_net = net.lift().expect("contacts imply an extension");
    let ext = ext_net.field().clone();
    let mut span = vec![octad.points[i].lift(f, &ext), octad.points[j].lift(f, &ext)];
    for u in contacts {
        span.push(steinerian_point(&ext_net, u)?);
    }
    Ok(span_dimension(&ext, &span)? == 1)
}

/// Images of the seven other points under projection from `x_k`.
///
/// With `c = x_k` and `p` its first nonzero coordinate (where `c_p = 1`),
/// `v ↦ (v_j − v_p·c_j)_{j ≠ p}`.
pub fn project_octad<F: Field>(octad: &Octad<F>, k: usize) -> Result<Vec<ProjPoint<F>>> {
    if k >= 8 {
        return Err(Error::IndexOutOfRange(format!("projection centre {k} must be below 8")));
    }
    let f = &octad.field;
    let c = octad.points[k].coords();
    let p = c.iter().position(|x| !f.is_zero(x)).unwrap();
    octad
        .points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(i, v)| {
            let v = v.coords();
            let img = (0..4)
                .filter(|&j| j != p)
                .map(|j| f.sub(&v[j], &f.mul(&v[p], &c[j])))
                .collect();
            ProjPoint::new(f, img).map_err(|_| {
                Error::DegenerateConfiguration(format!("point {i} coincides with the centre"))
            })
        })
        .collect()
}

/// Whether no three of the points are collinear.
pub fn no_three_collinear<F: Field>(field: &F, points: &[ProjPoint<F>]) -> bool {
    let n = points.len();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| {
                let t = [points[a].clone(), points[b].clone(), points[c].clone()];
                span_dimension(field, &t) == Ok(2)
            })
        })
    })
}

/// Whether some six of the plane points lie on a conic.
pub fn six_on_a_conic<F: Field>(field: &F, points: &[ProjPoint<F>]) -> bool {
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| {
            let c = p.coords();
            let mut row = Vec::with_capacity(6);
            for i in 0..3 {
                for j in i..3 {
                    row.push(field.mul(&c[i], &c[j]));
                }
            }
            row
        })
        .collect();
    (0..rows.len()).any(|skip| {
        let six: Vec<_> = rows.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, r)| r.clone()).collect();
        six.len() == 6 && linalg::rank(field, &six, 6) < 6
    })
}

/// The octad associated with seven plane points: the Gale transform gives
/// seven points of P³, completed by the eighth base point of their net.
pub fn octad_from_plane<F: Field>(field: &F, points7: &[ProjPoint<F>]) -> Result<Octad<F>> {
    if points7.len() != 7 || points7.iter().any(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch("seven points of P2 expected".into()));
    }
    if !no_three_collinear(field, points7) {
        return Err(Error::DegenerateConfiguration("three of the plane points are collinear".into()));
    }
    if six_on_a_conic(field, points7) {
        return Err(Error::DegenerateConfiguration("six of the plane points lie on a conic".into()));
    }
    let coords: Matrix<F::Elem> =
        (0..3).map(|r| points7.iter().map(|p| p.coords()[r].clone()).collect()).collect();
    let (_, kernel) = linalg::rank_and_kernel(field, &coords, 7);
    let gale = (0..7)
        .map(|col| ProjPoint::new(field, kernel.iter().map(|row| row[col].clone()).collect()))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::DegenerateConfiguration("Gale transform has a zero column".into()))?;
    complete_octad(field, &gale).map_err(|e| match e {
        Error::DegenerateNet(m) => Error::DegenerateConfiguration(m),
        e => e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::PrimeField;
    use crate::exact::projective::projective_points;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn diag(f: &PrimeField, d: [i64; 4]) -> Matrix<u64> {
        (0..4).map(|i| (0..4).map(|j| if i == j { f.from_i64(d[i]) } else { 0 }).collect()).collect()
    }

    fn cube_net(f: &PrimeField) -> QuadricNet<PrimeField> {
        QuadricNet::new(f, diag(f, [1, 0, 0, -1]), diag(f, [0, 1, 0, -1]), diag(f, [0, 0, 1, -1])).unwrap()
    }

    fn cube_points(f: &PrimeField) -> Vec<ProjPoint<PrimeField>> {
        let mut pts = Vec::new();
        for sx in [1, -1] {
            for sy in [1, -1] {
                for sz in [1, -1] {
                    pts.push(ProjPoint::from_i64(f, &[sx, sy, sz, 1]).unwrap());
                }
            }
        }
        pts
    }

    fn brute_force_base_locus(net: &QuadricNet<PrimeField>) -> Vec<ProjPoint<PrimeField>> {
        let f = net.field();
        let mut v: Vec<_> = projective_points(f, 3)
            .unwrap()
            .filter(|p| net.evaluate(p.coords()).iter().all(|x| *x == 0))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn cube_net_from_seven_points() {
        let f = PrimeField::new(101).unwrap();
        let pts = cube_points(&f);
        let seven: Vec<_> = pts.iter().filter(|p| p.coords() != [1, 100, 100, 1]).cloned().collect();
        let net = net_through(&f, &seven).unwrap();
        assert_eq!(net, cube_net(&f));
        assert_eq!(eighth_point(&f, &seven).unwrap(), ProjPoint::from_i64(&f, &[1, -1, -1, 1]).unwrap());
        let mut reversed = seven.clone();
        reversed.reverse();
        assert_eq!(eighth_point(&f, &reversed).unwrap(), ProjPoint::from_i64(&f, &[1, -1, -1, 1]).unwrap());
    }

    #[test]
    fn cube_base_locus_matches_enumeration() {
        for p in [5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let net = cube_net(&f);
            let octad = base_locus(&net).unwrap();
            assert_eq!(octad.points().to_vec(), brute_force_base_locus(&net));
            let mut expected = cube_points(&f);
            expected.sort();
            assert_eq!(octad.points().to_vec(), expected);
            assert_eq!(self_association_rank(&f, octad.points()), 7);
        }
    }

    #[test]
    fn six_points_on_a_conic_are_degenerate() {
        let f = PrimeField::new(101).unwrap();
        // (1 : t : t² : 0) lie on the conic xz = y² in the plane w = 0
        let mut pts: Vec<_> = (0..6).map(|t| ProjPoint::from_i64(&f, &[1, t, t * t, 0]).unwrap()).collect();
        pts.push(ProjPoint::from_i64(&f, &[0, 0, 0, 1]).unwrap());
        assert!(matches!(net_through(&f, &pts), Err(Error::DegenerateConfiguration(_))));
    }

    #[test]
    fn cube_hessian_and_degenerate_fixtures() {
        let f = PrimeField::new(101).unwrap();
        let net = cube_net(&f);
        let h = hessian_quartic(&net).unwrap();
        let x = SparseForm::var(&f, 3, 0);
        let y = SparseForm::var(&f, 3, 1);
        let z = SparseForm::var(&f, 3, 2);
        assert_eq!(h, x.mul(&y).mul(&z).mul(&x.add(&y).add(&z)).neg());
        let octad = base_locus(&net).unwrap();
        assert!(!smoothness_certificate(&octad));
        let a = octad.points().iter().position(|p| p.coords() == [1, 1, 1, 1]).unwrap();
        let b = octad.points().iter().position(|p| p.coords() == [1, 1, 100, 1]).unwrap();
        let line = ProjPoint::new(&f, net.polar(octad.points()[a].coords(), octad.points()[b].coords()).to_vec()).unwrap();
        assert_eq!(line.coords(), &[0, 0, 1]);
        assert!(matches!(bitangent_line(&net, &octad, a, b), Err(Error::ComponentLine)));
        assert_eq!(bitangent_line(&net, &octad, a, a).unwrap_err(), Error::EqualIndices);
        assert!(matches!(bitangent_line(&net, &octad, a, 8), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn cube_steinerian_points() {
        let f = PrimeField::new(101).unwrap();
        let net = cube_net(&f);
        let u = ProjPoint::from_i64(&f, &[1, 0, 0]).unwrap();
        assert_eq!(steinerian_point(&net, &u), Err(Error::CorankTwo));
        let u = ProjPoint::from_i64(&f, &[1, 1, 0]).unwrap();
        assert_eq!(steinerian_point(&net, &u).unwrap().coords(), &[0, 0, 1, 0]);
        let u = ProjPoint::from_i64(&f, &[1, 2, 3]).unwrap();
        assert_eq!(steinerian_point(&net, &u), Err(Error::NotOnHessian));
    }

    #[test]
    fn projecting_the_cube_octad_gives_the_fano_points() {
        let f = PrimeField::new(101).unwrap();
        let mut pts = cube_points(&f);
        pts.sort();
        let octad = Octad::new(&f, pts).unwrap();
        let k = octad.points().iter().position(|p| p.coords() == [1, 1, 1, 1]).unwrap();
        let mut img: Vec<Vec<i64>> = project_octad(&octad, k)
            .unwrap()
            .iter()
            .map(|p| p.coords().iter().map(|&c| if c == 100 { -1 } else { c as i64 }).collect())
            .collect();
        img.sort();
        // (v_y − v_x, v_z − v_x, v_w − v_x) with v_x = 1, up to scale −2
        let mut expected = vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 0, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ];
        expected.sort();
        assert_eq!(img, expected);
        assert!(!no_three_collinear(&f, &project_octad(&octad, k).unwrap()));
        assert!(project_octad(&octad, 8).is_err());
    }

    #[test]
    fn octads_reject_duplicates() {
        let f = PrimeField::new(101).unwrap();
        let mut pts = cube_points(&f);
        pts[5] = pts[2].clone();
        assert_eq!(Octad::new(&f, pts), Err(Error::DuplicatePoint(2, 5)));
    }

    fn random_points(f: &PrimeField, n: usize, dim: usize, rng: &mut ChaCha8Rng) -> Vec<ProjPoint<PrimeField>> {
        (0..n)
            .map(|_| loop {
                let c: Vec<u64> = (0..=dim).map(|_| f.random(rng)).collect();
                if let Ok(p) = ProjPoint::new(f, c) {
                    break p;
                }
            })
            .collect()
    }

    #[test]
    fn random_nets_over_f101() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 3 {
            let seven = random_points(&f, 7, 3, &mut rng);
            let Ok(net) = net_through(&f, &seven) else { continue };
            let Ok(octad) = base_locus(&net) else { continue };
            done += 1;
            for p in &seven {
                assert!(octad.points().contains(p));
            }
            assert!(self_association_rank(&f, octad.points()) <= 7);
            let h = hessian_quartic(&net).unwrap();
            let mut on_curve = 0;
            for u in projective_points(&f, 2).unwrap() {
                if h.eval(u.coords()) == 0 {
                    let r = linalg::rank(&f, &net.quadric_at(u.coords()), 4);
                    assert!(r <= 3);
                    if r == 3 {
                        on_curve += 1;
                    }
                }
                if on_curve >= 30 {
                    break;
                }
            }
            assert!(on_curve >= 30);
            // any seven base points regenerate the same net
            let other: Vec<_> = octad.points()[1..].to_vec();
            let again = net_through(&f, &other).unwrap();
            let span = |n: &QuadricNet<PrimeField>| n.matrices().iter().map(|m| m.concat()).collect::<Matrix<u64>>();
            let mut both = span(&net);
            both.extend(span(&again));
            assert_eq!(linalg::rank(&f, &both, 16), 3);
        }
    }

    #[test]
    fn random_eighth_point_matches_enumeration() {
        let f = PrimeField::new(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut checked = 0;
        while checked < 3 {
            let seven = random_points(&f, 7, 3, &mut rng);
            let Ok(net) = net_through(&f, &seven) else { continue };
            let Ok(octad) = base_locus(&net) else { continue };
            assert_eq!(octad.points().to_vec(), brute_force_base_locus(&net));
            let e = eighth_point(&f, &seven).unwrap();
            assert!(!seven.contains(&e));
            checked += 1;
        }
    }
}
