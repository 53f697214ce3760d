//! Generators of the vanishing ideal: vanishing, Gröbner property and
//! completeness against exhaustive binomial search.

use oddcycle::cyclegraph::{enumerate_toric_set, CycleFamilySpec, DEFAULT_ENUM_BUDGET};
use oddcycle::ideal::{
    binomial_completeness, build_generators, square_point_property, verify_vanishing,
};
use oddcycle::poly::{is_groebner, parse, MonomialOrder};
use oddcycle::Field;

fn setup(q: u64, spec: &str) -> (Field, CycleFamilySpec) {
    (Field::new(q).unwrap(), spec.parse().unwrap())
}

#[test]
fn generators_vanish_and_form_groebner_bases() {
    for (q, spec) in [
        (3u64, "3"),
        (5, "3"),
        (5, "5"),
        (7, "3"),
        (5, "3x2"),
        (3, "3,5"),
        (4, "3"),
        (11, "3"),
        (13, "3"),
    ] {
        let (field, spec) = setup(q, spec);
        let gens = build_generators(&spec, &field);
        let x = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(verify_vanishing(&gens, &x).unwrap(), "q={q} spec={spec}");
        assert!(
            is_groebner(&gens.polynomials(&field), &field).unwrap(),
            "q={q} spec={spec}"
        );
    }
}

#[test]
fn vanishing_binomials_reduce_to_zero() {
    for (q, spec) in [(3u64, "3"), (5, "3"), (3, "5"), (4, "3")] {
        let (field, spec) = setup(q, spec);
        let gens = build_generators(&spec, &field);
        let x = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET).unwrap();
        let report = binomial_completeness(&x, &gens, 1 << 24).unwrap();
        assert!(
            report.failures.is_empty(),
            "q={q} spec={spec}: {:?}",
            report.failures
        );
        // Over the full torus no binomial with exponents below q - 1 vanishes.
        assert_eq!(report.vanishing > 0, field.has_proper_squares(), "q={q}");
    }
}

#[test]
fn square_points_detect_membership() {
    let (field, spec) = setup(5, "3");
    let gens = build_generators(&spec, &field);
    for g in gens.polynomials(&field) {
        assert!(square_point_property(&g, &spec, &field, DEFAULT_ENUM_BUDGET).unwrap());
    }
    let f = parse("t1 - t2", 3, MonomialOrder::Grlex, &field).unwrap();
    assert!(!square_point_property(&f, &spec, &field, DEFAULT_ENUM_BUDGET).unwrap());
}
