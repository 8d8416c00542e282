//! Polar maps, singular loci, dual hypersurfaces by interpolation, nodal
//! members of linear families, and everywhere-tangency certificates.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::elimination::{binary_roots, binary_square_root, resultant_eliminate, SquareRoot};
use crate::exact::field::{Field, PrimeField, Rationals};
use crate::exact::form::{gradient, monomials, Monomial, SparseForm};
use crate::exact::linalg::{self, Matrix};
use crate::exact::projective::{projective_count, projective_point, ProjPoint};

/// Enumerating all of Pⁿ(F_q) is preferred below this many points.
const ENUMERATION_LIMIT: u64 = 2_000_000;

/// Zero locus of a nonzero form in Pⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypersurface<F: Field> {
    form: SparseForm<F>,
    gradient: Vec<SparseForm<F>>,
}

impl<F: Field> Hypersurface<F> {
    pub fn new(form: SparseForm<F>) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let gradient = gradient(&form);
        Ok(Self { form, gradient })
    }

    pub fn form(&self) -> &SparseForm<F> {
        &self.form
    }

    pub fn field(&self) -> &F {
        self.form.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.num_vars() - 1
    }

    pub fn contains(&self, pt: &[F::Elem]) -> bool {
        self.field().is_zero(&self.form.eval(pt))
    }

    pub fn gradient_at(&self, pt: &[F::Elem]) -> Vec<F::Elem> {
        self.gradient.iter().map(|g| g.eval(pt)).collect()
    }

    /// On the hypersurface with vanishing gradient.
    pub fn is_singular_at(&self, pt: &[F::Elem]) -> bool {
        let f = self.field();
        self.contains(pt) && self.gradient.iter().all(|g| f.is_zero(&g.eval(pt)))
    }
}

/// The point `(∂F/∂x_0 : … : ∂F/∂x_n)` of the dual space.
pub fn polar_map<F: Field>(h: &Hypersurface<F>, pt: &ProjPoint<F>) -> Result<ProjPoint<F>> {
    ProjPoint::new(h.field(), h.gradient_at(pt.coords())).map_err(|_| Error::SingularPoint)
}

fn check_enumerable<F: Field>(field: &F, n: usize) -> Result<u64> {
    let q = field.order().ok_or(Error::NotEnumerable)?;
    Ok(projective_count(q, n))
}

/// All rational points where every partial vanishes, in canonical order.
pub fn singular_points<F: Field>(h: &Hypersurface<F>) -> Result<Vec<ProjPoint<F>>> {
    let n = h.ambient_dim();
    let total = check_enumerable(h.field(), n)?;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|i| {
            let p = projective_point(h.field(), n, i);
            h.is_singular_at(p.coords()).then_some(p)
        })
        .collect())
}

/// All rational points of the hypersurface, in canonical order.
pub fn rational_points<F: Field>(h: &Hypersurface<F>) -> Result<Vec<ProjPoint<F>>> {
    let n = h.ambient_dim();
    let total = check_enumerable(h.field(), n)?;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|i| {
            let p = projective_point(h.field(), n, i);
            h.contains(p.coords()).then_some(p)
        })
        .collect())
}

/// Homogeneous Taylor pieces at `pt`: `F(pt·h + y) = Σ_k h^{d−k} G_k(y)`,
/// returned as `[G_0, …, G_d]`.
pub fn taylor_pieces<F: Field>(form: &SparseForm<F>, pt: &[F::Elem]) -> Vec<SparseForm<F>> {
    let f = form.field();
    let n = form.num_vars();
    // variables (h, y_0, …, y_n)
    let images: Vec<SparseForm<F>> = (0..n)
        .map(|j| {
            let mut c = vec![f.zero(); n + 1];
            c[0] = pt[j].clone();
            c[j + 1] = f.one();
            SparseForm::linear(f, &c)
        })
        .collect();
    let shifted = form.substitute(&images);
    let d = form.degree();
    let mut pieces: Vec<Vec<(Vec<u16>, F::Elem)>> = vec![Vec::new(); d as usize + 1];
    for (m, c) in shifted.terms() {
        let e = m.exponents();
        let k = d as usize - e[0] as usize;
        pieces[k].push((e[1..].to_vec(), c.clone()));
    }
    pieces
        .into_iter()
        .enumerate()
        .map(|(k, t)| SparseForm::from_terms(f, n, k as u32, t).expect("Taylor pieces are homogeneous"))
        .collect()
}

/// Least order of a nonvanishing derivative at a point of the hypersurface.
pub fn multiplicity_at<F: Field>(h: &Hypersurface<F>, pt: &ProjPoint<F>) -> Result<u32> {
    if !h.contains(pt.coords()) {
        return Err(Error::NotOnHypersurface);
    }
    let pieces = taylor_pieces(h.form(), pt.coords());
    Ok(pieces.iter().position(|g| !g.is_zero()).unwrap_or(pieces.len()) as u32)
}

/// Matrix of second partials at a point.
pub fn hessian_matrix_at<F: Field>(form: &SparseForm<F>, pt: &[F::Elem]) -> Matrix<F::Elem> {
    let grad = gradient(form);
    grad.iter().map(|g| gradient(g).iter().map(|gg| gg.eval(pt)).collect()).collect()
}

/// A node: multiplicity 2 with quadratic part of rank `n` in Pⁿ.
pub fn is_node<F: Field>(h: &Hypersurface<F>, pt: &ProjPoint<F>) -> Result<bool> {
    if multiplicity_at(h, pt)? != 2 {
        return Ok(false);
    }
    let n = h.ambient_dim();
    let hess = hessian_matrix_at(h.form(), pt.coords());
    Ok(linalg::rank(h.field(), &hess, n + 1) == n)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_point<F: Field, R: Rng>(field: &F, n: usize, rng: &mut R) -> ProjPoint<F> {
    loop {
        let c: Vec<F::Elem> = (0..=n).map(|_| field.random(rng)).collect();
        if let Ok(p) = ProjPoint::new(field, c) {
            return p;
        }
    }
}

/// Up to `count` distinct smooth rational points, deterministic in `seed`.
///
/// Small spaces are enumerated and shuffled; larger ones are sampled by
/// intersecting with random lines.
pub fn sample_smooth_points<F: Field>(
    h: &Hypersurface<F>,
    count: usize,
    seed: u64,
) -> Result<Vec<ProjPoint<F>>> {
    let f = h.field();
    let n = h.ambient_dim();
    let total = check_enumerable(f, n)?;
    let mut rng = rng_for(seed, 1);
    let is_smooth = |p: &ProjPoint<F>| h.gradient_at(p.coords()).iter().any(|x| !f.is_zero(x));
    if total <= ENUMERATION_LIMIT {
        let mut pts: Vec<_> = rational_points(h)?.into_iter().filter(is_smooth).collect();
        pts.shuffle(&mut rng);
        pts.truncate(count);
        return Ok(pts);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let attempts = 50 * count.max(1);
    for _ in 0..attempts {
        if out.len() >= count {
            break;
        }
        let a = random_point(f, n, &mut rng);
        let b = random_point(f, n, &mut rng);
        let basis = [a.coords().to_vec(), b.coords().to_vec()];
        let restricted = crate::nets::restrict_to_line(h.form(), &basis);
        if restricted.is_zero() {
            continue;
        }
        for (st, _) in binary_roots(&restricted)? {
            let (s, t) = (&st.coords()[0], &st.coords()[1]);
            let c = (0..=n).map(|i| f.add(&f.mul(s, &basis[0][i]), &f.mul(t, &basis[1][i]))).collect();
            let Ok(p) = ProjPoint::new(f, c) else { continue };
            if is_smooth(&p) && seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Per-degree evidence that no lower-degree form fits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitWitness {
    pub degree: u32,
    pub rows: usize,
    pub monomials: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFitReport<F: Field> {
    pub degree: u32,
    pub dual: SparseForm<F>,
    pub samples: usize,
    pub distinct_images: usize,
    pub seed: u64,
    /// One entry per trial degree; all but the last have `rank == monomials`.
    pub witness: Vec<FitWitness>,
}

fn monomial_row<F: Field>(field: &F, monos: &[Monomial], pt: &[F::Elem]) -> Vec<F::Elem> {
    monos
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .zip(pt)
                .fold(field.one(), |acc, (&e, x)| if e == 0 { acc } else { field.mul(&acc, &field.pow(x, e as u64)) })
        })
        .collect()
}

/// The lowest-degree form vanishing on the polar images of sampled smooth
/// points, required to be unique up to scalar.
///
/// `samples` caps the number of smooth points drawn; each trial degree uses
/// at least twice as many distinct images as it has monomials.
pub fn dual_interpolate<F: Field>(
    h: &Hypersurface<F>,
    degree_bound: u32,
    samples: usize,
    seed: u64,
) -> Result<DualFitReport<F>> {
    let f = h.field();
    let n = h.ambient_dim();
    let points = sample_smooth_points(h, samples, seed)?;
    let mut images: Vec<ProjPoint<F>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for p in &points {
        let w = polar_map(h, p)?;
        if seen.insert(w.clone()) {
            images.push(w);
        }
    }
    let mut witness = Vec::new();
    for d in 1..=degree_bound {
        let monos = monomials(n + 1, d);
        let needed = 2 * monos.len();
        if images.len() < needed {
            return Err(Error::FieldTooSmall(format!(
                "degree {d} needs {needed} distinct polar images, found {}",
                images.len()
            )));
        }
        let rows: Matrix<F::Elem> = images[..needed].iter().map(|w| monomial_row(f, &monos, w.coords())).collect();
        let (rank, kernel) = linalg::rank_and_kernel(f, &rows, monos.len());
        witness.push(FitWitness { degree: d, rows: needed, monomials: monos.len(), rank });
        match kernel.len() {
            0 => continue,
            1 => {
                let dual = SparseForm::from_terms(
                    f,
                    n + 1,
                    d,
                    monos.iter().zip(&kernel[0]).map(|(m, c)| (m.exponents().to_vec(), c.clone())),
                )?;
                if let Some(bad) = images.iter().find(|w| !f.is_zero(&dual.eval(w.coords()))) {
                    return Err(Error::InvariantViolation(format!(
                        "fitted dual form misses the polar image {}",
                        bad.display(f)
                    )));
                }
                return Ok(DualFitReport {
                    degree: d,
                    dual,
                    samples: points.len(),
                    distinct_images: images.len(),
                    seed,
                    witness,
                });
            }
            k => return Err(Error::AmbiguousFit { degree: d, kernel_dim: k }),
        }
    }
    Err(Error::NoFit(degree_bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidualityStats {
    pub tested: usize,
    pub agreed: usize,
}

impl BidualityStats {
    pub fn passed(&self) -> bool {
        self.tested > 0 && self.tested == self.agreed
    }
}

/// Polar map of the dual form sent back through the polar map of `h`, on
/// `sample_count` smooth points whose images are smooth on the dual.
pub fn biduality_stats<F: Field>(
    h: &Hypersurface<F>,
    dual: &SparseForm<F>,
    sample_count: usize,
    seed: u64,
) -> Result<BidualityStats> {
    let dual_h = Hypersurface::new(dual.clone())?;
    let pool = sample_smooth_points(h, sample_count * 4 + 16, seed.wrapping_add(1))?;
    let mut stats = BidualityStats { tested: 0, agreed: 0 };
    for v in pool {
        if stats.tested == sample_count {
            break;
        }
        let w = polar_map(h, &v)?;
        let Ok(back) = polar_map(&dual_h, &w) else { continue };
        stats.tested += 1;
        if back == v {
            stats.agreed += 1;
        }
    }
    if stats.tested < sample_count {
        return Err(Error::FieldTooSmall(format!(
            "only {} usable samples for biduality, wanted {sample_count}",
            stats.tested
        )));
    }
    Ok(stats)
}

/// Whether the dual's polar map inverts the polar map on sampled points.
pub fn biduality_check<F: Field>(
    h: &Hypersurface<F>,
    dual: &DualFitReport<F>,
    sample_count: usize,
) -> Result<bool> {
    Ok(biduality_stats(h, &dual.dual, sample_count, dual.seed)?.passed())
}

/// `F₀ + Σ tᵢ·Fᵢ` with each `tᵢ` ranging over a list of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec<F: Field> {
    pub base: SparseForm<F>,
    pub params: Vec<SparseForm<F>>,
    pub ranges: Vec<Vec<F::Elem>>,
}

impl<F: Field> FamilySpec<F> {
    /// Every parameter ranging over the whole (finite) field.
    pub fn full(base: SparseForm<F>, params: Vec<SparseForm<F>>) -> Result<Self> {
        let f = base.field().clone();
        let all: Vec<F::Elem> = f.elements()?.collect();
        let ranges = vec![all; params.len()];
        Self::new(base, params, ranges)
    }

    pub fn new(base: SparseForm<F>, params: Vec<SparseForm<F>>, ranges: Vec<Vec<F::Elem>>) -> Result<Self> {
        if ranges.len() != params.len() {
            return Err(Error::DimensionMismatch("one range per parameter".into()));
        }
        for p in &params {
            if p.num_vars() != base.num_vars() || (p.degree() != base.degree() && !p.is_zero()) {
                return Err(Error::DimensionMismatch("family forms must share degree and variables".into()));
            }
        }
        Ok(Self { base, params, ranges })
    }

    pub fn member(&self, t: &[F::Elem]) -> SparseForm<F> {
        self.params.iter().zip(t).fold(self.base.clone(), |acc, (p, c)| acc.add(&p.scale(c)))
    }

    fn all_forms(&self) -> Vec<&SparseForm<F>> {
        std::iter::once(&self.base).chain(&self.params).collect()
    }

    fn member_count(&self) -> usize {
        self.ranges.iter().map(Vec::len).product()
    }

    fn tuple(&self, mut index: usize) -> Vec<F::Elem> {
        let mut t = vec![self.base.field().zero(); self.params.len()];
        for i in (0..self.params.len()).rev() {
            let r = &self.ranges[i];
            t[i] = r[index % r.len()].clone();
            index /= r.len();
        }
        t
    }
}

/// The Heisenberg-invariant quartics: Fermat plus the four invariants
/// `x²w²+y²z²`, `y²w²+x²z²`, `z²w²+x²y²`, `xyzw`.
pub fn heisenberg_family<F: Field>(field: &F) -> Result<FamilySpec<F>> {
    let f = field;
    let q = |terms: &[[u16; 4]]| {
        SparseForm::from_terms(f, 4, 4, terms.iter().map(|e| (e.to_vec(), f.one()))).expect("quartic terms")
    };
    let base = q(&[[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]);
    let params = vec![
        q(&[[2, 0, 0, 2], [0, 2, 2, 0]]),
        q(&[[0, 2, 0, 2], [2, 0, 2, 0]]),
        q(&[[0, 0, 2, 2], [2, 2, 0, 0]]),
        q(&[[1, 1, 1, 1]]),
    ];
    if f.order().is_some() {
        FamilySpec::full(base, params)
    } else {
        let ranges = vec![Vec::new(); 4];
        FamilySpec::new(base, params, ranges)
    }
}

/// Parameter tuples whose member has exactly `target` rational singular
/// points, each a node. Results follow the enumeration order of the ranges.
pub fn nodal_family_search<F: Field>(spec: &FamilySpec<F>, target: usize) -> Result<Vec<Vec<F::Elem>>> {
    let f = spec.base.field();
    if spec.params.len() > 4 {
        return Err(Error::Precondition("at most four parameters can be scanned".into()));
    }
    let n = spec.base.num_vars() - 1;
    let total = check_enumerable(f, n)?;
    let forms = spec.all_forms();
    // values[point][form] = (F_i, ∂F_i/∂x_0, …)
    let values: Vec<Vec<Vec<F::Elem>>> = (0..total)
        .into_par_iter()
        .map(|i| {
            let p = projective_point(f, n, i);
            forms
                .iter()
                .map(|form| {
                    let mut v = vec![form.eval(p.coords())];
                    v.extend(gradient(form).iter().map(|g| g.eval(p.coords())));
                    v
                })
                .collect()
        })
        .collect();
    let hits: Vec<Option<Vec<F::Elem>>> = (0..spec.member_count())
        .into_par_iter()
        .map(|idx| {
            let t = spec.tuple(idx);
            let mut singular = Vec::new();
            for (pi, vals) in values.iter().enumerate() {
                let all_zero = (0..=n + 1).all(|c| {
                    let mut acc = vals[0][c].clone();
                    for (tv, pv) in t.iter().zip(&vals[1..]) {
                        acc = f.add(&acc, &f.mul(tv, &pv[c]));
                    }
                    f.is_zero(&acc)
                });
                if all_zero {
                    singular.push(pi as u64);
                    if singular.len() > target {
                        return None;
                    }
                }
            }
            if singular.len() != target {
                return None;
            }
            let member = Hypersurface::new(spec.member(&t)).ok()?;
            let all_nodes = singular
                .iter()
                .all(|&i| is_node(&member, &projective_point(f, n, i)).unwrap_or(false));
            all_nodes.then_some(t)
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

/// A parameter tuple whose member is singular at `node`, solving the
/// linear conditions `∇F₀(node) + Σ tᵢ ∇Fᵢ(node) = 0`.
pub fn singular_member_through<F: Field>(spec: &FamilySpec<F>, node: &ProjPoint<F>) -> Result<Vec<F::Elem>> {
    let f = spec.base.field();
    let k = spec.params.len();
    let grads: Vec<Vec<F::Elem>> = spec
        .all_forms()
        .iter()
        .map(|form| gradient(form).iter().map(|g| g.eval(node.coords())).collect())
        .collect();
    // unknowns (t_1, …, t_k, s) with s multiplying the base gradient
    let rows: Matrix<F::Elem> = (0..node.coords().len())
        .map(|c| {
            let mut r: Vec<F::Elem> = (1..=k).map(|i| grads[i][c].clone()).collect();
            r.push(grads[0][c].clone());
            r
        })
        .collect();
    let (_, kernel) = linalg::rank_and_kernel(f, &rows, k + 1);
    let v = kernel
        .iter()
        .find(|v| !f.is_zero(&v[k]))
        .ok_or_else(|| Error::DegenerateConfiguration("no family member is singular at the point".into()))?;
    let s_inv = f.inv(&v[k]).unwrap();
    Ok(v[..k].iter().map(|x| f.mul(x, &s_inv)).collect())
}

/// A rational member of the Heisenberg family singular at an integral point,
/// together with its reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalNodalMember {
    pub node: Vec<i64>,
    pub params: Vec<BigRational>,
    pub scan_params: Vec<u64>,
    pub params_mod_p: Vec<u64>,
}

/// The first member singular at `(1:a:b:c)`, `0 < a < b < c < 8`, whose
/// reduction to the scan field is among `scan_hits` and which keeps
/// `target` nodes over `p`.
pub fn rational_nodal_member(
    scan_field: &PrimeField,
    scan_hits: &[Vec<u64>],
    p: &PrimeField,
    target: usize,
) -> Result<(RationalNodalMember, Hypersurface<PrimeField>)> {
    let q_family = heisenberg_family(&Rationals)?;
    let p_family = heisenberg_family(p)?;
    for a in 1..6i64 {
        for b in a + 1..7 {
            for c in b + 1..8 {
                let node = vec![1, a, b, c];
                let Ok(t) = singular_member_through(&q_family, &ProjPoint::from_i64(&Rationals, &node)?) else {
                    continue;
                };
                let scan: Option<Vec<u64>> = t.iter().map(|x| scan_field.reduce_rational(x)).collect();
                let modp: Option<Vec<u64>> = t.iter().map(|x| p.reduce_rational(x)).collect();
                let (Some(scan), Some(modp)) = (scan, modp) else { continue };
                if !scan_hits.contains(&scan) {
                    continue;
                }
                let surface = Hypersurface::new(p_family.member(&modp))?;
                let nodes = singular_points(&surface)?;
                if nodes.len() == target && nodes.iter().all(|n| is_node(&surface, n).unwrap_or(false)) {
                    let member = RationalNodalMember { node, params: t, scan_params: scan, params_mod_p: modp };
                    return Ok((member, surface));
                }
            }
        }
    }
    Err(Error::DegenerateConfiguration("no small rational node gives a surviving nodal member".into()))
}

/// Certificate that two plane curves meet with even multiplicity everywhere.
#[derive(Clone, Debug)]
pub struct TangencyReport<F: Field> {
    /// Coordinate change `T` with the curves pulled back as `F∘T`.
    pub chart: Matrix<F::Elem>,
    pub resultant: SparseForm<F>,
    pub root: SquareRoot<F>,
    /// `deg Δ`, i.e. half the intersection number.
    pub delta_degree: u32,
    /// Rational common points with their intersection multiplicity.
    pub contacts: Vec<(ProjPoint<F>, u32)>,
}

impl<F: Field> TangencyReport<F> {
    /// Degree of the rational part of Δ.
    pub fn rational_delta_degree(&self) -> u32 {
        self.contacts.iter().map(|(_, m)| m / 2).sum()
    }
}

fn transform<F: Field>(form: &SparseForm<F>, t: &Matrix<F::Elem>) -> SparseForm<F> {
    let images: Vec<SparseForm<F>> = t.iter().map(|row| SparseForm::linear(form.field(), row)).collect();
    form.substitute(&images)
}

fn pure_power_nonzero<F: Field>(form: &SparseForm<F>, var: usize) -> bool {
    let mut e = vec![0u16; form.num_vars()];
    e[var] = form.degree() as u16;
    !form.field().is_zero(&form.coeff(&e))
}

/// Intersection multiplicity at `v` read off the resultant as the order of
/// the root at the projection of `v` from the eliminated vertex.
fn root_order<F: Field>(res: &SparseForm<F>, projected: &[F::Elem]) -> u32 {
    let f = res.field();
    // R(a, b) vanishes to order m at (a:b) iff (b·s − a·t)^m divides R(s, t)
    let (a, b) = (&projected[0], &projected[1]);
    let lin = SparseForm::linear(f, &[b.clone(), f.neg(a)]);
    let mut m = 0;
    let mut rest = res.clone();
    loop {
        if rest.is_zero() || rest.degree() == 0 {
            return m;
        }
        match divide_binary(&rest, &lin) {
            Some(q) => {
                rest = q;
                m += 1;
            }
            None => return m,
        }
    }
}

fn divide_binary<F: Field>(num: &SparseForm<F>, den: &SparseForm<F>) -> Option<SparseForm<F>> {
    let f = num.field();
    let a = num.binary_coeffs();
    let b = den.binary_coeffs();
    let lead = b.iter().position(|x| !f.is_zero(x))?;
    let db = b.len() - 1;
    let mut rem = a.clone();
    let qlen = a.len() - db;
    let mut quot = vec![f.zero(); qlen];
    let inv = f.inv(&b[lead]).unwrap();
    for i in 0..qlen {
        let c = f.mul(&rem[i + lead], &inv);
        if f.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, bj));
        }
        quot[i] = c;
    }
    rem.iter().all(|x| f.is_zero(x)).then(|| SparseForm::from_binary_coeffs(f, &quot))
}

/// Everywhere-tangency of two plane curves over a finite field.
///
/// In a seeded random chart the resultants eliminating `z` and `y` must be
/// nonzero (no common component) and the `z`-resultant must be a perfect
/// square. Rational common points are reported with intersection
/// multiplicity, taken as the smaller root order of the two resultants.
pub fn tangency_divisor<F: Field>(f_form: &SparseForm<F>, g_form: &SparseForm<F>, seed: u64) -> Result<TangencyReport<F>> {
    let k = f_form.field();
    if f_form.num_vars() != 3 || g_form.num_vars() != 3 {
        return Err(Error::DimensionMismatch("plane curves expected".into()));
    }
    if f_form.is_zero() || g_form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut rng = rng_for(seed, 2);
    let (chart, fp, gp) = (0..1000)
        .find_map(|_| {
            let t: Matrix<F::Elem> = (0..3).map(|_| (0..3).map(|_| k.random(&mut rng)).collect()).collect();
            linalg::inverse(k, &t)?;
            let (fp, gp) = (transform(f_form, &t), transform(g_form, &t));
            let ok = [1, 2].iter().all(|&v| pure_power_nonzero(&fp, v) && pure_power_nonzero(&gp, v));
            ok.then_some((t, fp, gp))
        })
        .ok_or_else(|| Error::FieldTooSmall("no generic chart found".into()))?;
    let res_z = resultant_eliminate(&fp, &gp, 2)?;
    let res_y = resultant_eliminate(&fp, &gp, 1)?;
    if res_z.is_zero() || res_y.is_zero() {
        return Err(Error::CommonComponent);
    }
    let root = binary_square_root(&res_z).map_err(|e| match e {
        Error::NotASquare(why) => Error::NotEverywhereTangent(why),
        other => other,
    })?;
    let inv = linalg::inverse(k, &chart).unwrap();
    let total = check_enumerable(k, 2)?;
    let common: Vec<ProjPoint<F>> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let p = projective_point(k, 2, i);
            (k.is_zero(&f_form.eval(p.coords())) && k.is_zero(&g_form.eval(p.coords()))).then_some(p)
        })
        .collect();
    let contacts = common
        .into_iter()
        .map(|p| {
            let v = linalg::mat_vec(k, &inv, p.coords());
            let mz = root_order(&res_z, &[v[0].clone(), v[1].clone()]);
            let my = root_order(&res_y, &[v[0].clone(), v[2].clone()]);
            (p, mz.min(my))
        })
        .collect();
    Ok(TangencyReport { chart, delta_degree: root.g.degree(), resultant: res_z, root, contacts })
}
