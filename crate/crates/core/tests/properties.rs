//! Property tests for invariants that hold on every input.

use proptest::prelude::*;

use quartics::duality::{self, Hypersurface};
use quartics::exact::{Field, PrimeField, ProjPoint, SparseForm};
use quartics::theta::{self, F2Vector, QuadFormF2};
use quartics::weyl::{self, LatticeVector, WeylElement};

fn lattice_vector() -> impl Strategy<Value = LatticeVector> {
    prop::array::uniform8(-3i64..=3).prop_map(LatticeVector)
}

fn root_index() -> impl Strategy<Value = usize> {
    0usize..126
}

fn f2() -> impl Strategy<Value = F2Vector> {
    (0u8..64).prop_map(F2Vector::new)
}

proptest! {
    #[test]
    fn reflections_are_involutive_isometries(r in root_index(), u in lattice_vector(), v in lattice_vector()) {
        let alpha = &weyl::all_roots()[r];
        let su = weyl::reflect(alpha, &u).unwrap();
        let sv = weyl::reflect(alpha, &v).unwrap();
        prop_assert_eq!(weyl::reflect(alpha, &su).unwrap(), u);
        prop_assert_eq!(su.dot(&sv), u.dot(&v));
        prop_assert_eq!(su.dot(&LatticeVector::k()), u.dot(&LatticeVector::k()));
    }

    #[test]
    fn reflections_permute_lines(r in root_index(), l in 0usize..56) {
        let alpha = &weyl::all_roots()[r];
        let (_, line) = &weyl::lines()[l];
        let image = weyl::reflect(alpha, line).unwrap();
        prop_assert!(weyl::line_label_of(&image).is_some());
    }

    #[test]
    fn w0_is_central(r in root_index(), v in lattice_vector()) {
        let s = WeylElement::reflection(&weyl::all_roots()[r]).unwrap();
        let w0 = WeylElement::w0();
        prop_assert_eq!(s.mul(&w0).apply(&v), w0.mul(&s).apply(&v));
    }

    #[test]
    fn shifted_forms_share_the_polarization(d in 0u8..64, v in f2(), x in f2(), y in f2()) {
        let q = QuadFormF2::from_diagonal(d);
        let qv = q.shifted(&v);
        let polar = |f: &QuadFormF2| f.eval(&x.add(&y)) ^ f.eval(&x) ^ f.eval(&y);
        prop_assert_eq!(polar(&q), x.symplectic(&y));
        prop_assert_eq!(polar(&qv), x.symplectic(&y));
        prop_assert_eq!(qv.eval(&x), q.eval(&x) ^ x.symplectic(&v));
    }

    #[test]
    fn arf_counts_zeros(d in 0u8..64) {
        let q = QuadFormF2::from_diagonal(d);
        let expected = if q.arf() == 0 { 36 } else { 28 };
        prop_assert_eq!(q.zeros(), expected);
    }

    #[test]
    fn restriction_is_additive(a in root_index(), b in root_index()) {
        let roots = weyl::all_roots();
        let sum = roots[a].add(&roots[b]);
        prop_assert_eq!(theta::res(&sum).unwrap(), theta::res(&roots[a]).unwrap().add(&theta::res(&roots[b]).unwrap()));
    }

    #[test]
    fn polar_map_ignores_scaling(coeffs in prop::collection::vec(0u64..101, 15), pt in prop::collection::vec(0u64..101, 3), c in 1u64..101) {
        let f = PrimeField::new(101).unwrap();
        let terms = quartics::exact::monomials(3, 4).iter().zip(coeffs).map(|(m, a)| (m.exponents().to_vec(), a)).collect::<Vec<_>>();
        let form = SparseForm::from_terms(&f, 3, 4, terms).unwrap();
        prop_assume!(!form.is_zero());
        let Ok(p) = ProjPoint::new(&f, pt.clone()) else { return Ok(()) };
        let scaled = ProjPoint::new(&f, pt.iter().map(|x| f.mul(x, &c)).collect()).unwrap();
        let h = Hypersurface::new(form.clone()).unwrap();
        let h2 = Hypersurface::new(form.scale(&c)).unwrap();
        let a = duality::polar_map(&h, &p);
        let b = duality::polar_map(&h2, &scaled);
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a, b);
        }
    }
}
