//! Explicit generators of the vanishing ideal `I(X*)` and the checks built on
//! them.
//!
//! The generator set is the torus part `t_i^{q-1} - 1` for every variable
//! plus, when `2 | q - 1`, one binomial per `gamma`-subset `H` of each cycle
//! block: `prod_{w not in H} t_w^{(q-1)/2} - prod_{h in H} t_h^{(q-1)/2}`.
//! The longer monomial is stored first, so it is the leading term under grlex.

use crate::cyclegraph::{CycleFamilySpec, ToricSet};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::{reduce, Binomial, Monomial, MonomialOrder, Polynomial};

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..r).rev().find(|&i| idx[i] < i + n - r) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    nvars: usize,
    torus_part: Vec<Binomial>,
    cycle_part: Vec<Vec<Binomial>>,
}

impl GeneratorSet {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn torus_part(&self) -> &[Binomial] {
        &self.torus_part
    }

    /// One entry per cycle copy, in block order; every entry is empty in the torus case.
    pub fn cycle_part(&self) -> &[Vec<Binomial>] {
        &self.cycle_part
    }

    pub fn len(&self) -> usize {
        self.torus_part.len() + self.cycle_part.iter().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Torus part first, then the cycle parts in block order.
    pub fn binomials(&self) -> impl Iterator<Item = &Binomial> {
        self.torus_part
            .iter()
            .chain(self.cycle_part.iter().flatten())
    }

    pub fn polynomials(&self, field: &Field) -> Vec<Polynomial> {
        self.binomials()
            .map(|b| b.to_polynomial(MonomialOrder::Grlex, field))
            .collect()
    }

    /// One generator per line in the polynomial text grammar.
    pub fn to_text(&self, field: &Field) -> String {
        let mut out = String::new();
        for p in self.polynomials(field) {
            out.push_str(&p.render(field));
            out.push('\n');
        }
        out
    }
}

pub fn build_generators(spec: &CycleFamilySpec, field: &Field) -> GeneratorSet {
    let s = spec.edge_count();
    let q1 = field.unit_order() as u16;
    let torus_part = (0..s)
        .map(|i| Binomial {
            plus: Monomial::var(s, i, q1),
            minus: Monomial::one(s),
        })
        .collect();
    let half = q1 / 2;
    let cycle_part = spec
        .blocks()
        .iter()
        .map(|b| {
            if !field.has_proper_squares() {
                return Vec::new();
            }
            let k = b.k as usize;
            combinations(k, (k - 1) / 2)
                .into_iter()
                .map(|h| {
                    let mut short = vec![0u16; s];
                    let mut long = vec![0u16; s];
                    for j in 0..k {
                        if h.contains(&j) {
                            short[b.offset + j] = half;
                        } else {
                            long[b.offset + j] = half;
                        }
                    }
                    Binomial {
                        plus: Monomial::new(long),
                        minus: Monomial::new(short),
                    }
                })
                .collect()
        })
        .collect();
    GeneratorSet {
        nvars: s,
        torus_part,
        cycle_part,
    }
}

fn check_nvars(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// True iff every generator vanishes at every point of `x`.
pub fn verify_vanishing(gens: &GeneratorSet, x: &ToricSet) -> Result<bool> {
    check_nvars(x.nvars(), gens.nvars())?;
    let field = x.field();
    Ok(gens
        .binomials()
        .all(|b| x.points().all(|p| b.evaluate_unchecked(p, field).is_zero())))
}

/// Index of the first point of `x` where `f` does not vanish.
pub fn non_vanishing_witness(f: &Polynomial, x: &ToricSet) -> Result<Option<usize>> {
    check_nvars(x.nvars(), f.nvars())?;
    let field = x.field();
    Ok(x.points()
        .position(|p| !f.evaluate_unchecked(p, field).is_zero()))
}

/// Membership in `I(X)` by evaluation at every point.
pub fn vanishing_membership(f: &Polynomial, x: &ToricSet) -> Result<bool> {
    Ok(non_vanishing_witness(f, x)?.is_none())
}

/// Reduces every exponent of a supp-disjoint binomial modulo `q - 1`. The
/// result agrees with `f` as a function on `(K*)^s`; the flag reports whether
/// any exponent changed.
pub fn reduce_mod_torus(f: &Binomial, q: u64) -> Result<(bool, Binomial)> {
    if !f.has_disjoint_supports() {
        return Err(Error::SupportsNotDisjoint);
    }
    let q1 = (q - 1) as u16;
    let mut changed = false;
    let mut cut = |m: &Monomial| {
        Monomial::new(
            m.exponents()
                .iter()
                .map(|&e| {
                    if e >= q1 {
                        changed = true;
                        e % q1
                    } else {
                        e
                    }
                })
                .collect(),
        )
    };
    let reduced = Binomial {
        plus: cut(&f.plus),
        minus: cut(&f.minus),
    };
    Ok((changed, reduced))
}

/// True iff `f` vanishes at every tuple of squares `(a_1^2, ..., a_s^2)`.
pub fn square_point_property(
    f: &Polynomial,
    spec: &CycleFamilySpec,
    field: &Field,
    budget: u128,
) -> Result<bool> {
    let s = spec.edge_count();
    check_nvars(s, f.nvars())?;
    let squares = field.squares();
    let needed = (squares.len() as u128).saturating_pow(s as u32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut digits = vec![0usize; s];
    let mut point = vec![squares[0]; s];
    loop {
        if !f.evaluate_unchecked(&point, field).is_zero() {
            return Ok(false);
        }
        let mut i = 0;
        loop {
            if i == s {
                return Ok(true);
            }
            digits[i] += 1;
            if digits[i] < squares.len() {
                point[i] = squares[digits[i]];
                break;
            }
            digits[i] = 0;
            point[i] = squares[0];
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletenessReport {
    /// Nonzero supp-disjoint binomials examined.
    pub tested: usize,
    /// Of those, how many vanish on the point set.
    pub vanishing: usize,
    /// Vanishing binomials with a nonzero remainder modulo the generators.
    pub failures: Vec<Binomial>,
}

/// Every nonzero binomial `t^a - t^b` with disjoint supports and exponents
/// below `q - 1` that vanishes on `x` must reduce to zero modulo `gens`.
/// Exhaustive over `(2(q-2)+1)^s` binomials.
pub fn binomial_completeness(
    x: &ToricSet,
    gens: &GeneratorSet,
    budget: u128,
) -> Result<CompletenessReport> {
    let s = x.nvars();
    check_nvars(s, gens.nvars())?;
    let field = x.field();
    let top = field.unit_order() as i32 - 1;
    let choices = (2 * top + 1) as usize;
    let needed = (choices as u128).saturating_pow(s as u32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let basis = gens.polynomials(field);
    let mut report = CompletenessReport::default();
    // Each variable carries a signed exponent: positive on t^a, negative on t^b.
    let mut signed = vec![-top; s];
    loop {
        if signed.iter().any(|&e| e != 0) {
            let plus = Monomial::new(signed.iter().map(|&e| e.max(0) as u16).collect());
            let minus = Monomial::new(signed.iter().map(|&e| (-e).max(0) as u16).collect());
            let b = Binomial { plus, minus };
            report.tested += 1;
            if x.points().all(|p| b.evaluate_unchecked(p, field).is_zero()) {
                report.vanishing += 1;
                let r = reduce(&b.to_polynomial(MonomialOrder::Grlex, field), &basis, field)?;
                if !r.is_zero() {
                    report.failures.push(b);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == s {
                return Ok(report);
            }
            signed[i] += 1;
            if signed[i] <= top {
                break;
            }
            signed[i] = -top;
            i += 1;
        }
    }
}

/// The binomial `t_block^{(q-1)/2} - 1` over a whole cycle block.
pub fn block_square_binomial(
    spec: &CycleFamilySpec,
    block: usize,
    field: &Field,
) -> Option<Binomial> {
    let s = spec.edge_count();
    let b = *spec.blocks().get(block)?;
    let mut exps = vec![0u16; s];
    for i in b.range() {
        exps[i] = (field.unit_order() / 2) as u16;
    }
    Some(Binomial {
        plus: Monomial::new(exps),
        minus: Monomial::one(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclegraph::{enumerate_toric_set, DEFAULT_ENUM_BUDGET};
    use crate::gf::Fe;
    use crate::poly::parse;

    #[test]
    fn combination_order() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(5, 2).len(), 10);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn generator_counts() {
        let f5 = Field::new(5).unwrap();
        let g = build_generators(&CycleFamilySpec::cycle(5).unwrap(), &f5);
        assert_eq!(
            (g.torus_part().len(), g.cycle_part()[0].len(), g.len()),
            (5, 10, 15)
        );
        let g = build_generators(&CycleFamilySpec::cycle(3).unwrap(), &Field::new(4).unwrap());
        assert_eq!(g.len(), 3);
        assert!(g.cycle_part()[0].is_empty());
        let g = build_generators(&"3x2".parse().unwrap(), &f5);
        assert_eq!((g.torus_part().len(), g.len()), (6, 12));
        assert!(g.binomials().all(Binomial::has_disjoint_supports));
    }

    #[test]
    fn generator_text_for_triangle() {
        let f5 = Field::new(5).unwrap();
        let g = build_generators(&CycleFamilySpec::cycle(3).unwrap(), &f5);
        let expected =
            "t1^4 - 1\nt2^4 - 1\nt3^4 - 1\nt2^2*t3^2 - t1^2\nt1^2*t3^2 - t2^2\nt1^2*t2^2 - t3^2\n";
        assert_eq!(g.to_text(&f5), expected);
        let g2 = build_generators(&CycleFamilySpec::cycle(3).unwrap(), &Field::new(2).unwrap());
        assert_eq!(
            g2.to_text(&Field::new(2).unwrap()),
            "t1 + 1\nt2 + 1\nt3 + 1\n"
        );
    }

    #[test]
    fn vanishing_checks() {
        let f5 = Field::new(5).unwrap();
        let spec = CycleFamilySpec::cycle(5).unwrap();
        let x = enumerate_toric_set(&spec, &f5, DEFAULT_ENUM_BUDGET).unwrap();
        let gens = build_generators(&spec, &f5);
        assert!(verify_vanishing(&gens, &x).unwrap());

        // Lower one exponent of the first cycle binomial from 2 to 1.
        let mut broken = gens.clone();
        let b = &mut broken.cycle_part[0][0];
        let mut exps = b.plus.exponents().to_vec();
        let j = exps.iter().position(|&e| e == 2).unwrap();
        exps[j] = 1;
        b.plus = Monomial::new(exps);
        assert!(!verify_vanishing(&broken, &x).unwrap());

        let torus_only = GeneratorSet {
            nvars: 5,
            torus_part: gens.torus_part.clone(),
            cycle_part: vec![],
        };
        assert!(verify_vanishing(&torus_only, &x).unwrap());
        let wrong = build_generators(&CycleFamilySpec::cycle(3).unwrap(), &f5);
        assert!(verify_vanishing(&wrong, &x).is_err());
    }

    #[test]
    fn membership_examples() {
        let f5 = Field::new(5).unwrap();
        let spec = CycleFamilySpec::cycle(5).unwrap();
        let x = enumerate_toric_set(&spec, &f5, DEFAULT_ENUM_BUDGET).unwrap();
        let p = |s: &str| parse(s, 5, MonomialOrder::Grlex, &f5).unwrap();
        assert!(vanishing_membership(&p("0"), &x).unwrap());
        assert!(!vanishing_membership(&p("1"), &x).unwrap());
        let whole = block_square_binomial(&spec, 0, &f5).unwrap();
        assert!(vanishing_membership(&whole.to_polynomial(MonomialOrder::Grlex, &f5), &x).unwrap());
        let w = non_vanishing_witness(&p("t1 - 1"), &x).unwrap().unwrap();
        assert_ne!(x.point(w)[0], Fe::ONE);
    }

    #[test]
    fn torus_reduction() {
        let m = |e: &[u16]| Monomial::new(e.to_vec());
        let (flag, r) = reduce_mod_torus(
            &Binomial {
                plus: m(&[4, 0]),
                minus: m(&[0, 1]),
            },
            5,
        )
        .unwrap();
        assert!(flag);
        assert_eq!(
            r,
            Binomial {
                plus: m(&[0, 0]),
                minus: m(&[0, 1])
            }
        );
        let (flag, r) = reduce_mod_torus(
            &Binomial {
                plus: m(&[5, 0]),
                minus: m(&[0, 1]),
            },
            5,
        )
        .unwrap();
        assert!(flag);
        assert_eq!(r.plus, m(&[1, 0]));
        let b = Binomial {
            plus: m(&[3, 0]),
            minus: m(&[0, 2]),
        };
        assert_eq!(reduce_mod_torus(&b, 5).unwrap(), (false, b.clone()));
        let shared = Binomial {
            plus: m(&[1, 1]),
            minus: m(&[0, 1]),
        };
        assert_eq!(
            reduce_mod_torus(&shared, 5),
            Err(Error::SupportsNotDisjoint)
        );
    }

    #[test]
    fn square_points() {
        let f5 = Field::new(5).unwrap();
        let spec = CycleFamilySpec::cycle(3).unwrap();
        for g in build_generators(&spec, &f5).polynomials(&f5) {
            assert!(square_point_property(&g, &spec, &f5, 1 << 20).unwrap());
        }
        let p = |s: &str| parse(s, 3, MonomialOrder::Grlex, &f5).unwrap();
        assert!(!square_point_property(&p("t1 - 1"), &spec, &f5, 1 << 20).unwrap());
        assert!(square_point_property(&p("0"), &spec, &f5, 1 << 20).unwrap());
        assert!(matches!(
            square_point_property(&p("0"), &spec, &f5, 4),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
