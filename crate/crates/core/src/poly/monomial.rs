use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial `t^a` as a dense exponent vector with its cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Monomial {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// `t_var^exp` in `nvars` variables (0-based `var`).
    pub fn var(nvars: usize, var: usize, exp: u16) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Monomial {
            exps,
            degree: exp as u32,
        }
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent exceeds 16 bits"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders in use: graded lexicographic with `t_1 > t_2 > ...`, and
/// the order on `K[t, u]` (u last) comparing `t`-parts by grlex first and
/// then the exponent of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grlex,
    OrderH,
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    // The first differing exponent decides; a larger exponent is the larger monomial.
    a.cmp(b)
}

impl MonomialOrder {
    /// Compares two monomials of equal length. Callers guarantee the lengths match.
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grlex => a.degree.cmp(&b.degree).then_with(|| lex(&a.exps, &b.exps)),
            MonomialOrder::OrderH => {
                let n = a.exps.len() - 1;
                let (ua, ub) = (a.exps[n] as u32, b.exps[n] as u32);
                (a.degree - ua)
                    .cmp(&(b.degree - ub))
                    .then_with(|| lex(&a.exps[..n], &b.exps[..n]))
                    .then(ua.cmp(&ub))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::OrderH => "order_h",
        }
    }
}

fn check_dims(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            got: b.nvars(),
        });
    }
    Ok(())
}

/// Graded lexicographic comparison with `t_1` the highest variable.
pub fn grlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_dims(a, b)?;
    Ok(MonomialOrder::Grlex.cmp(a, b))
}

/// Comparison on monomials `t^a u^e` where the last variable is `u`.
pub fn order_h_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_dims(a, b)?;
    if a.nvars() == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    Ok(MonomialOrder::OrderH.cmp(a, b))
}
