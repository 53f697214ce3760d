use super::{Monomial, Polynomial, Term};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Result of multivariate division `f = sum(q_i * g_i) + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn check_divisors(f: &Polynomial, divisors: &[Polynomial]) -> Result<()> {
    for g in divisors {
        f.check_compatible(g)?;
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    Ok(())
}

fn run(
    f: &Polynomial,
    divisors: &[Polynomial],
    field: &Field,
    keep_quotients: bool,
) -> Result<Division> {
    check_divisors(f, divisors)?;
    let lead: Vec<(&Monomial, Fe)> = divisors
        .iter()
        .map(|g| {
            let lt = &g.terms[0];
            (
                &lt.mono,
                field
                    .inv(lt.coeff)
                    .expect("leading coefficients are nonzero"),
            )
        })
        .collect();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms.first() {
        let hit = lead.iter().position(|(m, _)| m.divides(&lt.mono));
        match hit {
            Some(i) => {
                let (lm, inv_lc) = lead[i];
                let coeff = field.mul(lt.coeff, inv_lc);
                let mono = lt.mono.div(lm).unwrap();
                p = p.axpy(
                    field.neg(Fe::ONE),
                    &divisors[i].mul_term(coeff, &mono, field),
                    field,
                );
                if keep_quotients {
                    quotients[i].push(Term { coeff, mono });
                }
            }
            None => {
                // LT(p) is not divisible by any leading monomial; move it to the remainder.
                remainder.push(p.terms.remove(0));
            }
        }
    }
    let wrap = |terms: Vec<Term>| Polynomial {
        nvars: f.nvars,
        order: f.order,
        terms,
    };
    Ok(Division {
        quotients: quotients.into_iter().map(wrap).collect(),
        remainder: wrap(remainder),
    })
}

/// Multivariate division of `f` by the ordered list `divisors`.
///
/// Quotient terms are produced in descending order because the leading term
/// of the running dividend strictly decreases.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], field: &Field) -> Result<Division> {
    run(f, divisors, field, true)
}

/// Remainder of `f` modulo `divisors`.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], field: &Field) -> Result<Polynomial> {
    Ok(run(f, divisors, field, false)?.remainder)
}

/// `S(f, g) = (L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, field: &Field) -> Result<Polynomial> {
    f.check_compatible(g)?;
    let (lf, lg) = (f.leading_term()?, g.leading_term()?);
    let l = lf.mono.lcm(&lg.mono);
    let a = f.mul_term(field.inv(lf.coeff)?, &l.div(&lf.mono).unwrap(), field);
    let b = g.mul_term(field.inv(lg.coeff)?, &l.div(&lg.mono).unwrap(), field);
    Ok(a.axpy(field.neg(Fe::ONE), &b, field))
}

/// First pair `(i, j)` whose S-polynomial has a nonzero remainder modulo
/// `basis`, together with that remainder. Pairs with coprime leading
/// monomials are skipped.
pub fn first_failing_pair(
    basis: &[Polynomial],
    field: &Field,
) -> Result<Option<(usize, usize, Polynomial)>> {
    if let Some(first) = basis.first() {
        check_divisors(first, basis)?;
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (mi, mj) = (&basis[i].terms[0].mono, &basis[j].terms[0].mono);
            if mi.is_coprime(mj) {
                continue;
            }
            let r = reduce(&s_polynomial(&basis[i], &basis[j], field)?, basis, field)?;
            if !r.is_zero() {
                return Ok(Some((i, j, r)));
            }
        }
    }
    Ok(None)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(basis: &[Polynomial], field: &Field) -> Result<bool> {
    Ok(first_failing_pair(basis, field)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, MonomialOrder};
    use proptest::prelude::*;

    fn f5() -> Field {
        Field::new(5).unwrap()
    }

    fn p(text: &str, nvars: usize) -> Polynomial {
        parse(text, nvars, MonomialOrder::Grlex, &f5()).unwrap()
    }

    /// Recombines `sum(q_i g_i) + r` symbolically.
    fn recombine(d: &Division, gs: &[Polynomial], field: &Field) -> Polynomial {
        let mut acc = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(gs) {
            acc = acc.add(&q.mul(g, field).unwrap(), field).unwrap();
        }
        acc
    }

    #[test]
    fn division_examples() {
        let field = f5();
        let g = [p("t1^4 - 1", 1)];
        let d = divide(&p("t1^4 - 1", 1), &g, &field).unwrap();
        assert_eq!(d.quotients[0], p("1", 1));
        assert!(d.remainder.is_zero());
        let d = divide(&p("t1^5", 1), &g, &field).unwrap();
        assert_eq!(d.quotients[0], p("t1", 1));
        assert_eq!(d.remainder, p("t1", 1));
        assert_eq!(
            divide(&p("t1", 1), &[p("0", 1)], &field),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn s_polynomial_examples() {
        let field = f5();
        let f = p("t1^4 - 1", 2);
        assert!(s_polynomial(&f, &f, &field).unwrap().is_zero());
        let g = p("t2^4 - 1", 2);
        assert_eq!(s_polynomial(&f, &g, &field).unwrap(), p("t1^4 - t2^4", 2));
        let s = s_polynomial(&f, &g, &field).unwrap();
        assert!(reduce(&s, &[f.clone(), g.clone()], &field)
            .unwrap()
            .is_zero());
        assert_eq!(
            s_polynomial(&f, &p("0", 2), &field),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn groebner_examples() {
        let field = f5();
        assert!(is_groebner(&[p("t1^4 - 1", 2), p("t2^4 - 1", 2)], &field).unwrap());
        let bad = [p("t1^2 - t2", 3), p("t1^3 - t3", 3)];
        // S = t1*(t1^2 - t2) - (t1^3 - t3) = -t1*t2 + t3, irreducible modulo {t1^2, t1^3}.
        let (i, j, r) = first_failing_pair(&bad, &field).unwrap().unwrap();
        assert_eq!((i, j), (0, 1));
        assert_eq!(r, p("-t1*t2 + t3", 3));
        assert!(!is_groebner(&bad, &field).unwrap());
    }

    #[test]
    fn torus_generators_are_groebner() {
        for q in [2u64, 3, 4, 5, 7, 8, 11, 13] {
            let field = Field::new(q).unwrap();
            for s in 1..=6 {
                let gens: Vec<Polynomial> = (0..s)
                    .map(|i| {
                        Polynomial::from_terms(
                            s,
                            MonomialOrder::Grlex,
                            [
                                (Fe::ONE, Monomial::var(s, i, (q - 1) as u16)),
                                (field.neg(Fe::ONE), Monomial::one(s)),
                            ],
                            &field,
                        )
                        .unwrap()
                    })
                    .collect();
                assert!(is_groebner(&gens, &field).unwrap(), "q={q} s={s}");
            }
        }
    }

    fn poly3() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..5, prop::collection::vec(0u16..7, 3)), 0..7).prop_map(|ts| {
            Polynomial::from_terms(
                3,
                MonomialOrder::Grlex,
                ts.into_iter().map(|(c, e)| (Fe(c), Monomial::new(e))),
                &Field::new(5).unwrap(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn division_invariants(f in poly3(), g1 in poly3(), g2 in poly3(),
                               pts in prop::collection::vec(prop::collection::vec(1u32..5, 3), 10)) {
            prop_assume!(!g1.is_zero() && !g2.is_zero());
            let field = f5();
            let gs = [g1, g2];
            let d = divide(&f, &gs, &field).unwrap();
            prop_assert_eq!(recombine(&d, &gs, &field), f.clone());
            // Pointwise re-check at random unit points.
            for pt in &pts {
                let x: Vec<Fe> = pt.iter().map(|&v| Fe(v)).collect();
                let mut rhs = d.remainder.evaluate(&x, &field).unwrap();
                for (q, g) in d.quotients.iter().zip(&gs) {
                    rhs = field.add(rhs, field.mul(q.evaluate(&x, &field).unwrap(), g.evaluate(&x, &field).unwrap()));
                }
                prop_assert_eq!(f.evaluate(&x, &field).unwrap(), rhs);
            }
            for t in d.remainder.terms() {
                for g in &gs {
                    prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
                }
            }
            if let Ok(lm) = f.leading_monomial() {
                for (q, g) in d.quotients.iter().zip(&gs) {
                    if let Ok(lq) = q.leading_monomial() {
                        let lead = lq.mul(g.leading_monomial().unwrap());
                        prop_assert_ne!(MonomialOrder::Grlex.cmp(&lead, lm), std::cmp::Ordering::Greater);
                    }
                }
            }
        }
    }
}
