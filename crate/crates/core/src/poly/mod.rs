//! Polynomials over `F_q` in dense-exponent form.
//!
//! A [`Polynomial`] keeps its terms strictly descending under its order tag,
//! with no zero coefficients; the zero polynomial has no terms. Values are
//! immutable and every operation returns a fresh polynomial. Arithmetic takes
//! the [`Field`] explicitly since elements are bare indices.

mod division;
mod monomial;
mod text;

use std::cmp::Ordering;

pub use division::{divide, first_failing_pair, is_groebner, reduce, s_polynomial, Division};
pub use monomial::{grlex_cmp, order_h_cmp, Monomial, MonomialOrder};
pub use text::parse;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Fe,
    pub mono: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Polynomial {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Fe) -> Polynomial {
        Polynomial::term(order, c, Monomial::one(nvars))
    }

    pub fn term(order: MonomialOrder, coeff: Fe, mono: Monomial) -> Polynomial {
        let nvars = mono.nvars();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
    /// and drops zero coefficients.
    pub fn from_terms(
        nvars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Fe, Monomial)>,
        field: &Field,
    ) -> Result<Polynomial> {
        let mut raw: Vec<Term> = Vec::new();
        for (coeff, mono) in terms {
            if mono.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: mono.nvars(),
                });
            }
            if order == MonomialOrder::OrderH && nvars == 0 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    got: 0,
                });
            }
            raw.push(Term { coeff, mono });
        }
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = field.add(last.coeff, t.coeff),
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial {
            nvars,
            order,
            terms,
        })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum total degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.mono)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// `self + scale * other`, merging the two sorted term lists.
    pub(crate) fn axpy(&self, scale: Fe, other: &Polynomial, field: &Field) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = field.mul(scale, b[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: b[j].mono.clone(),
                        });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].coeff, field.mul(scale, b[j].coeff));
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = field.mul(scale, t.coeff);
            if !c.is_zero() {
                out.push(Term {
                    coeff: c,
                    mono: t.mono.clone(),
                });
            }
        }
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial, field: &Field) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.axpy(Fe::ONE, other, field))
    }

    pub fn sub(&self, other: &Polynomial, field: &Field) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.axpy(field.neg(Fe::ONE), other, field))
    }

    pub fn neg(&self, field: &Field) -> Polynomial {
        self.scale(field.neg(Fe::ONE), field)
    }

    pub fn scale(&self, c: Fe, field: &Field) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(c, t.coeff),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    /// Multiplies by `c * mono`; the term order is preserved since both orders
    /// are compatible with multiplication.
    pub fn mul_term(&self, c: Fe, mono: &Monomial, field: &Field) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(c, t.coeff),
                mono: t.mono.mul(mono),
            })
            .collect();
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &Field) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc = Polynomial::zero(self.nvars, self.order);
        for t in &other.terms {
            acc = acc.axpy(Fe::ONE, &self.mul_term(t.coeff, &t.mono, field), field);
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[Fe], field: &Field) -> Result<Fe> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self.evaluate_unchecked(point, field))
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[Fe], field: &Field) -> Fe {
        let mut acc = Fe::ZERO;
        for t in &self.terms {
            let mut v = t.coeff;
            for (&x, &e) in point.iter().zip(t.mono.exponents()) {
                if e > 0 {
                    v = field.mul(v, field.pow(x, e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        acc
    }

    /// Multiplies each term `t^a` by `u^(total - |a|)`, appending `u` as the
    /// last variable. The result is tagged with [`MonomialOrder::OrderH`].
    pub fn homogenize(&self, total: u32) -> Result<Polynomial> {
        if let Some(deg) = self.degree() {
            if deg > total {
                return Err(Error::DegreeTooSmall {
                    degree: deg,
                    target: total,
                });
            }
        }
        let order = MonomialOrder::OrderH;
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = t.mono.exponents().to_vec();
                exps.push((total - t.mono.degree()) as u16);
                Term {
                    coeff: t.coeff,
                    mono: Monomial::new(exps),
                }
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            nvars: self.nvars + 1,
            order,
            terms,
        })
    }

    /// Sets the last variable to 1 and drops it, returning a grlex polynomial.
    pub fn dehomogenize(&self, field: &Field) -> Result<Polynomial> {
        if self.nvars == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        let n = self.nvars - 1;
        Polynomial::from_terms(
            n,
            MonomialOrder::Grlex,
            self.terms
                .iter()
                .map(|t| (t.coeff, Monomial::new(t.mono.exponents()[..n].to_vec()))),
            field,
        )
    }

    /// Textual form such as `t1^3*t2 - t3^2 + 1`.
    pub fn render(&self, field: &Field) -> String {
        text::render(self, field)
    }
}

/// A binomial `t^plus - t^minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Binomial> {
        if plus.nvars() != minus.nvars() {
            return Err(Error::DimensionMismatch {
                expected: plus.nvars(),
                got: minus.nvars(),
            });
        }
        Ok(Binomial { plus, minus })
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    pub fn has_disjoint_supports(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    /// Divides both monomials by their gcd. On units the two binomials vanish
    /// at the same points.
    pub fn normalized(&self) -> Binomial {
        let g = self.plus.gcd(&self.minus);
        Binomial {
            plus: self.plus.div(&g).unwrap(),
            minus: self.minus.div(&g).unwrap(),
        }
    }

    pub fn to_polynomial(&self, order: MonomialOrder, field: &Field) -> Polynomial {
        Polynomial::from_terms(
            self.nvars(),
            order,
            [
                (Fe::ONE, self.plus.clone()),
                (field.neg(Fe::ONE), self.minus.clone()),
            ],
            field,
        )
        .expect("binomial monomials share a length")
    }

    pub fn evaluate(&self, point: &[Fe], field: &Field) -> Result<Fe> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        Ok(self.evaluate_unchecked(point, field))
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[Fe], field: &Field) -> Fe {
        let mono = |m: &Monomial| {
            point
                .iter()
                .zip(m.exponents())
                .fold(Fe::ONE, |acc, (&x, &e)| {
                    if e == 0 {
                        acc
                    } else {
                        field.mul(acc, field.pow(x, e as u64))
                    }
                })
        };
        field.sub(mono(&self.plus), mono(&self.minus))
    }
}
