//! Seeded random instances: points, forms, octads, quartics, pencil pairs.
//!
//! Every generator draws from a caller-supplied RNG, so a run is fixed by
//! its seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::duality::{self, Hypersurface};
use crate::exact::{monomials, Field, ProjPoint, SparseForm};
use crate::nets::{self, Octad, QuadricNet};
use crate::Result;

/// ChaCha8 seeded by `seed` on a separate `stream` per workload.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_point<F: Field, R: Rng + ?Sized>(field: &F, dim: usize, rng: &mut R) -> ProjPoint<F> {
    loop {
        let c: Vec<F::Elem> = (0..=dim).map(|_| field.random(rng)).collect();
        if let Ok(p) = ProjPoint::new(field, c) {
            return p;
        }
    }
}

/// A form with every coefficient drawn uniformly (possibly zero).
pub fn random_form<F: Field, R: Rng + ?Sized>(field: &F, num_vars: usize, degree: u32, rng: &mut R) -> SparseForm<F> {
    let terms: Vec<_> = monomials(num_vars, degree).iter().map(|m| (m.exponents().to_vec(), field.random(rng))).collect();
    SparseForm::from_terms(field, num_vars, degree, terms).expect("monomials have the stated shape")
}

/// A net through 7 random points whose base locus is 8 simple rational
/// points and whose Hessian passes the smoothness certificate, with the
/// number of rejected draws.
pub fn random_smooth_octad<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> (QuadricNet<F>, Octad<F>, usize) {
    let mut rejected = 0;
    loop {
        let seven: Vec<_> = (0..7).map(|_| random_point(field, 3, rng)).collect();
        if let Ok(net) = nets::net_through(field, &seven) {
            if let Ok(octad) = nets::base_locus(&net) {
                if nets::smoothness_certificate(&octad) {
                    return (net, octad, rejected);
                }
            }
        }
        rejected += 1;
    }
}

/// A plane quartic without rational singular points.
pub fn random_smooth_plane_quartic<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Result<Hypersurface<F>> {
    loop {
        let Ok(h) = Hypersurface::new(random_form(field, 3, 4, rng)) else { continue };
        if duality::singular_points(&h)?.is_empty() {
            return Ok(h);
        }
    }
}

/// (Γ, Γ + λQ²) with Γ a smooth quartic, Q a random conic and λ ≠ 0.
pub fn random_pencil_pair<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Result<(SparseForm<F>, SparseForm<F>)> {
    let gamma = random_smooth_plane_quartic(field, rng)?.form().clone();
    let q = random_form(field, 3, 2, rng);
    let lambda = loop {
        let l = field.random(rng);
        if !field.is_zero(&l) {
            break l;
        }
    };
    let g = gamma.add(&q.pow(2).scale(&lambda));
    Ok((gamma, g))
}
