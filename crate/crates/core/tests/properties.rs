//! Property tests: field axioms of the exact scalars, multilinearity and
//! antisymmetry of the algebraic operations, storage round-trips, and the
//! coboundary-cocycle implication for arbitrary r-matrices.

use proptest::prelude::*;

use drinfeld::algebra::{wedge, Bivector, Tensor2, Vector};
use drinfeld::bialgebra::{coboundary_delta, coboundary_delta_tensor, cocycle_defect};
use drinfeld::catalog;
use drinfeld::scalar::{poly_gcd, Poly, Scalar, Var};
use drinfeld::schema;

fn small_rat() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::from_rat(n, d))
}

/// Scalars mixing rational constants with up to two parameter factors.
fn scalar() -> impl Strategy<Value = Scalar> {
    let param = prop_oneof![
        Just(Scalar::param("alpha")),
        Just(Scalar::param("rho")),
        Just(Scalar::param("kappa")),
    ];
    (small_rat(), proptest::option::of(param.clone()), proptest::option::of(param)).prop_map(
        |(c, p1, p2)| {
            let mut s = c;
            if let Some(p) = p1 {
                s = s * p;
            }
            if let Some(p) = p2 {
                s = s + p;
            }
            s
        },
    )
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn polynomial() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((small_rat(), 0u32..3, 0u32..3), 1..4).prop_map(|terms| {
        let x = Var::new("alpha");
        let y = Var::new("rho");
        let mut p = Poly::zero();
        for (c, ex, ey) in terms {
            let mono = Poly::var(x).pow(ex).mul(&Poly::var(y).pow(ey));
            p = p.add(&mono.mul(&Poly::constant(c.as_rat().unwrap())));
        }
        p
    })
}

fn vector6() -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), 6).prop_map(Vector::from_coeffs)
}

fn bivector6() -> impl Strategy<Value = Bivector> {
    proptest::collection::vec(((0usize..6, 0usize..6), scalar()), 0..6).prop_map(|terms| {
        let mut b = Bivector::zero(6);
        for ((i, j), c) in terms {
            if i != j {
                b.add_term(i, j, c);
            }
        }
        b
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() + (-a.clone()), Scalar::zero());
        prop_assert_eq!(a.clone() * Scalar::one(), a.clone());
    }

    #[test]
    fn scalar_division_inverts(a in scalar(), b in nonzero_scalar()) {
        let q = a.checked_div(&b).unwrap();
        prop_assert_eq!(q * b, a);
    }

    #[test]
    fn rational_functions_cancel_common_factors(
        p in polynomial(),
        q in polynomial(),
        g in polynomial(),
    ) {
        prop_assume!(!q.is_zero() && !g.is_zero());
        let lhs = Scalar::from_ratio(p.mul(&g), q.mul(&g)).unwrap();
        let rhs = Scalar::from_ratio(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // and the gcd really divides both inputs
        let d = poly_gcd(&p.mul(&g), &q.mul(&g));
        prop_assert!(p.mul(&g).exact_div(&d).is_some());
        prop_assert!(q.mul(&g).exact_div(&d).is_some());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(
        x in vector6(),
        y in vector6(),
        z in vector6(),
        s in scalar(),
    ) {
        let la = catalog::euclid3();
        let xy = la.bracket(&x, &y).unwrap();
        let yx = la.bracket(&y, &x).unwrap();
        prop_assert_eq!(&xy, &yx.scale(&-Scalar::one()));
        let lhs = la.bracket(&x, &y.add(&z.scale(&s)).unwrap()).unwrap();
        let rhs = xy.add(&la.bracket(&x, &z).unwrap().scale(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(la.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn wedge_is_alternating_bilinear(x in vector6(), y in vector6()) {
        prop_assert!(wedge(&x, &x).unwrap().is_zero());
        let xy = wedge(&x, &y).unwrap();
        let yx = wedge(&y, &x).unwrap();
        prop_assert_eq!(xy, yx.scale(&-Scalar::one()));
    }

    #[test]
    fn bivector_tensor_roundtrip(b in bivector6()) {
        prop_assert_eq!(b.to_tensor2().skew_bivector(), b.clone());
        // expansion really is antisymmetric
        prop_assert!(b.to_tensor2().is_antisymmetric());
    }

    #[test]
    fn coboundaries_are_cocycles_for_random_r(b in bivector6()) {
        for la in [catalog::euclid3(), catalog::poincare21()] {
            let delta = coboundary_delta(&la, &b).unwrap();
            prop_assert!(cocycle_defect(&la, &delta).unwrap().is_zero());
        }
    }

    #[test]
    fn invariant_symmetric_part_does_not_change_delta(
        b in bivector6(),
        s1 in small_rat(),
        s2 in small_rat(),
    ) {
        // adding an ad-invariant symmetric tensor to the expansion leaves the
        // coboundary unchanged
        let la = catalog::euclid3();
        let c1 = catalog::casimir(&la, "c1").unwrap();
        let c2 = catalog::casimir(&la, "c2").unwrap();
        let sym = c1.scale(&s1).add(&c2.scale(&s2)).unwrap();
        let full: Tensor2 = b.to_tensor2().add(&sym).unwrap();
        let from_full = coboundary_delta_tensor(&la, &full).unwrap();
        let from_skew = coboundary_delta(&la, &b).unwrap();
        prop_assert_eq!(from_full, from_skew);
    }
}

#[test]
fn catalog_exports_roundtrip_losslessly() {
    for id in catalog::list(None) {
        let entry = catalog::get(&id).unwrap();
        let doc = schema::export_entry(&entry).unwrap();
        // TOML and JSON both reparse to the same document content
        let toml_text = schema::to_toml(&doc).unwrap();
        let json_text = schema::to_json(&doc).unwrap();
        let from_toml = schema::from_toml(&toml_text).unwrap();
        let from_json = schema::from_json(&json_text).unwrap();
        match (&from_toml, &from_json) {
            (schema::Document::RMatrix(a), schema::Document::RMatrix(b)) => {
                assert_eq!(
                    a.to_bivector().unwrap(),
                    entry.r_matrix().unwrap(),
                    "{id} via toml"
                );
                assert_eq!(
                    b.to_bivector().unwrap(),
                    entry.r_matrix().unwrap(),
                    "{id} via json"
                );
            }
            (schema::Document::LieAlgebra(a), schema::Document::LieAlgebra(_)) => {
                assert!(
                    a.to_algebra().unwrap().structurally_equal(&entry.algebra().unwrap()),
                    "{id}"
                );
            }
            (schema::Document::PoissonTarget(a), schema::Document::PoissonTarget(_)) => {
                assert_eq!(a.to_target().unwrap(), entry.poisson_target().unwrap(), "{id}");
            }
            (schema::Document::Cocommutator(a), schema::Document::Cocommutator(_)) => {
                assert_eq!(
                    a.to_cocommutator().unwrap(),
                    entry.cocommutator().unwrap(),
                    "{id}"
                );
            }
            _ => {} // tensors and isos: reparse success is the check
        }
    }
}
