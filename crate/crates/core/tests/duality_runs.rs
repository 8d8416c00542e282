use quartics::duality::{self, Hypersurface};
use quartics::exact::{monomials, Field, PrimeField, SparseForm};
use quartics::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_form(f: &PrimeField, n: usize, d: u32, rng: &mut ChaCha8Rng) -> SparseForm<PrimeField> {
    let ms = monomials(n, d);
    SparseForm::from_terms(f, n, d, ms.iter().map(|m| (m.exponents().to_vec(), f.random(rng)))).unwrap()
}

fn smooth_plane_quartic(f: &PrimeField, rng: &mut ChaCha8Rng) -> Hypersurface<PrimeField> {
    loop {
        let h = Hypersurface::new(random_form(f, 3, 4, rng)).unwrap();
        if duality::singular_points(&h).unwrap().is_empty() {
            return h;
        }
    }
}

#[test]
fn smooth_plane_quartic_has_dual_of_degree_twelve() {
    let f = PrimeField::new(499).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let h = smooth_plane_quartic(&f, &mut rng);
    let fit = duality::dual_interpolate(&h, 12, 600, 12).unwrap();
    assert_eq!(fit.degree, 12);
    assert_eq!(fit.witness.len(), 12);
    for w in &fit.witness[..11] {
        assert_eq!(w.rank, w.monomials, "degree {} already fits", w.degree);
    }
    assert_eq!(fit.witness[11].rank + 1, fit.witness[11].monomials);
}

#[test]
fn nodal_scan_controls() {
    let f = PrimeField::new(11).unwrap();
    let family = duality::heisenberg_family(&f).unwrap();
    let smooth = duality::nodal_family_search(&family, 0).unwrap();
    assert!(smooth.contains(&vec![0, 0, 0, 0]));
    assert!(duality::nodal_family_search(&family, 17).unwrap().is_empty());
}

#[test]
fn nodes_of_a_kummer_member() {
    let f = PrimeField::new(11).unwrap();
    let family = duality::heisenberg_family(&f).unwrap();
    let hits = duality::nodal_family_search(&family, 16).unwrap();
    assert!(!hits.is_empty());
    let member = Hypersurface::new(family.member(&hits[0])).unwrap();
    let nodes = duality::singular_points(&member).unwrap();
    assert_eq!(nodes.len(), 16);
    for n in &nodes {
        assert_eq!(duality::multiplicity_at(&member, n).unwrap(), 2);
        assert_eq!(duality::polar_map(&member, n), Err(Error::SingularPoint));
    }
    // smooth points have multiplicity one
    let smooth = duality::sample_smooth_points(&member, 20, 4).unwrap();
    for p in &smooth {
        assert_eq!(duality::multiplicity_at(&member, p).unwrap(), 1);
    }
}

#[test]
fn pencil_pairs_are_everywhere_tangent_and_random_pairs_are_not() {
    let f = PrimeField::new(101).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..5 {
        let gamma = smooth_plane_quartic(&f, &mut rng).form().clone();
        let q = random_form(&f, 3, 2, &mut rng);
        let lambda = 1 + f.random(&mut rng) % 100;
        let g = gamma.add(&q.pow(2).scale(&lambda));
        let rep = duality::tangency_divisor(&gamma, &g, i).unwrap();
        assert_eq!(rep.delta_degree, 8);
        assert_eq!(rep.root.g.mul(&rep.root.g).scale(&rep.root.c), rep.resultant);
        assert!(rep.contacts.iter().all(|(_, m)| m % 2 == 0));
        let rational_roots: usize = quartics::exact::binary_roots(&rep.root.g).unwrap().iter().map(|(_, m)| m).sum();
        assert_eq!(rep.rational_delta_degree() as usize, rational_roots);
        let other = random_form(&f, 3, 4, &mut rng);
        assert!(matches!(duality::tangency_divisor(&gamma, &other, i), Err(Error::NotEverywhereTangent(_))));
    }
}
