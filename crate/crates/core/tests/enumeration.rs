//! Toric-set enumeration against a monolithic walk over (K*)^n.

use std::collections::BTreeSet;

use oddcycle::cyclegraph::{
    cardinality_formula, enumerate_toric_set, theta_map, CycleFamilySpec, DEFAULT_ENUM_BUDGET,
};
use oddcycle::{Count, Error, Fe, Field};

/// Every `x` in `(K*)^n` mapped through `theta`, with no block decomposition.
fn monolithic(spec: &CycleFamilySpec, field: &Field) -> BTreeSet<Vec<Fe>> {
    let units = field.units();
    let n = spec.vertex_count();
    let mut digits = vec![0usize; n];
    let mut out = BTreeSet::new();
    loop {
        let x: Vec<Fe> = digits.iter().map(|&i| units[i]).collect();
        out.insert(theta_map(spec, &x, field).unwrap());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            digits[i] += 1;
            if digits[i] < units.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn block_product_matches_monolithic_walk() {
    for (q, spec) in [
        (3u64, "3"),
        (5, "3"),
        (4, "3"),
        (3, "3x2"),
        (3, "3,5"),
        (7, "3"),
        (2, "3"),
        (5, "5"),
        (8, "3"),
    ] {
        let field = Field::new(q).unwrap();
        let spec: CycleFamilySpec = spec.parse().unwrap();
        let x = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET).unwrap();
        let oracle = monolithic(&spec, &field);
        let got: Vec<Vec<Fe>> = x.points().map(<[Fe]>::to_vec).collect();
        let want: Vec<Vec<Fe>> = oracle.into_iter().collect();
        assert_eq!(got, want, "q={q} spec={spec}");
        assert_eq!(
            Count::from(x.len()),
            cardinality_formula(&spec, q),
            "q={q} spec={spec}"
        );
    }
}

#[test]
fn toric_set_is_a_group() {
    for (q, spec) in [(5u64, "3"), (7, "3"), (3, "3x2"), (4, "3")] {
        let field = Field::new(q).unwrap();
        let spec: CycleFamilySpec = spec.parse().unwrap();
        let x = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET).unwrap();
        let one = vec![Fe::ONE; x.nvars()];
        assert!(x.contains(&one));
        for a in x.points() {
            let inv: Vec<Fe> = a.iter().map(|&c| field.inv(c).unwrap()).collect();
            assert!(x.contains(&inv));
            for b in x.points().step_by(3) {
                let prod: Vec<Fe> = a.iter().zip(b).map(|(&s, &t)| field.mul(s, t)).collect();
                assert!(x.contains(&prod), "q={q} spec={spec}");
            }
        }
    }
}

#[test]
fn budget_is_enforced_before_work() {
    let field = Field::new(7).unwrap();
    let spec: CycleFamilySpec = "5x2".parse().unwrap();
    let err = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }), "{err:?}");
}

#[test]
fn cardinality_closed_form() {
    let c = |q: u64, s: &str| cardinality_formula(&s.parse().unwrap(), q);
    assert_eq!(c(5, "5"), Count::from(512u32));
    assert_eq!(c(5, "3"), Count::from(32u32));
    assert_eq!(c(4, "3"), Count::from(27u32));
    assert_eq!(
        c(13, "3,5"),
        Count::from((12u64.pow(3) / 2) * (12u64.pow(5) / 2))
    );
    // 2 ∤ q - 1: X* is the whole torus.
    assert_eq!(c(8, "3x2"), Count::from(7u64.pow(6)));
}
