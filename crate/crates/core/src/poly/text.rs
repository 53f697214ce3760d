//! Text form of polynomials: `t1^3*t2 - t3^2 + 1`.
//!
//! Variables are `t1..tn`; polynomials tagged with the homogenized order use
//! `u` for their last variable. Coefficients are written as integers; in a
//! prime field the residues above `p/2` are printed as negatives.

use std::fmt::Write;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

fn render_monomial(m: &Monomial, has_u: bool, out: &mut String) {
    let n = m.nvars();
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        if has_u && i == n - 1 {
            out.push('u');
        } else {
            write!(out, "t{}", i + 1).unwrap();
        }
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

pub(super) fn render(f: &Polynomial, field: &Field) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let has_u = f.order() == MonomialOrder::OrderH;
    let p = field.characteristic();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let c = t.coeff.index();
        let (negative, magnitude) = if field.degree() == 1 && c > p / 2 {
            (true, p - c)
        } else {
            (false, c)
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if t.mono.is_one() {
            write!(out, "{magnitude}").unwrap();
        } else {
            if magnitude != 1 {
                write!(out, "{magnitude}*").unwrap();
            }
            render_monomial(&t.mono, has_u, &mut out);
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }
}

/// Parses the textual grammar produced by [`Polynomial::render`].
///
/// ```text
/// poly   := ['-'] term (('+' | '-') term)*
/// term   := factor ('*' factor)*
/// factor := integer | var ['^' integer]
/// var    := 't' index | 'u'
/// ```
pub fn parse(text: &str, nvars: usize, order: MonomialOrder, field: &Field) -> Result<Polynomial> {
    let has_u = order == MonomialOrder::OrderH;
    let nt = if has_u {
        nvars.checked_sub(1).ok_or(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        })?
    } else {
        nvars
    };
    let mut ps = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negate = false;
    if ps.peek() == Some(b'-') {
        ps.pos += 1;
        negate = true;
    } else if ps.peek() == Some(b'+') {
        ps.pos += 1;
    }
    loop {
        let mut coeff = Fe::ONE;
        let mut exps = vec![0u16; nvars];
        loop {
            match ps.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = ps.number()?;
                    let c = if field.degree() == 1 {
                        field.from_int((n % field.q() as u64) as i64)
                    } else if n < field.q() as u64 {
                        Fe(n as u32)
                    } else {
                        return Err(ps.err(format!(
                            "coefficient {n} is not an element index of F_{}",
                            field.q()
                        )));
                    };
                    coeff = field.mul(coeff, c);
                }
                Some(b't') => {
                    ps.pos += 1;
                    let at = ps.pos;
                    let i = ps.number()? as usize;
                    if i == 0 || i > nt {
                        return Err(Error::Parse {
                            pos: at,
                            msg: format!("variable t{i} outside t1..t{nt}"),
                        });
                    }
                    let e = exponent(&mut ps)?;
                    bump(&mut exps[i - 1], e, &ps)?;
                }
                Some(b'u') if has_u => {
                    ps.pos += 1;
                    let e = exponent(&mut ps)?;
                    bump(&mut exps[nvars - 1], e, &ps)?;
                }
                _ => return Err(ps.err("expected a coefficient or variable")),
            }
            if ps.peek() == Some(b'*') {
                ps.pos += 1;
            } else {
                break;
            }
        }
        if negate {
            coeff = field.neg(coeff);
        }
        terms.push((coeff, Monomial::new(exps)));
        match ps.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return Err(ps.err("expected '+', '-' or end of input")),
        }
        ps.pos += 1;
    }
    Polynomial::from_terms(nvars, order, terms, field)
}

fn exponent(ps: &mut Parser<'_>) -> Result<u64> {
    if ps.peek() == Some(b'^') {
        ps.pos += 1;
        ps.number()
    } else {
        Ok(1)
    }
}

fn bump(slot: &mut u16, e: u64, ps: &Parser<'_>) -> Result<()> {
    *slot = u16::try_from(*slot as u64 + e).map_err(|_| ps.err("exponent exceeds 16 bits"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_render() {
        let field = Field::new(5).unwrap();
        let f = parse("t1^3*t2 - t3^2 + 1", 3, MonomialOrder::Grlex, &field).unwrap();
        assert_eq!(f.render(&field), "t1^3*t2 - t3^2 + 1");
        let g = parse("2*t1 + t1*3 - 1", 1, MonomialOrder::Grlex, &field).unwrap();
        assert_eq!(g.render(&field), "-1");
        let h = parse("t1*t1 + 0", 1, MonomialOrder::Grlex, &field).unwrap();
        assert_eq!(h.render(&field), "t1^2");
        assert_eq!(
            parse("0", 2, MonomialOrder::Grlex, &field)
                .unwrap()
                .render(&field),
            "0"
        );
        let w = parse("u^2 - t1^2", 2, MonomialOrder::OrderH, &field).unwrap();
        assert_eq!(w.render(&field), "-t1^2 + u^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let field = Field::new(5).unwrap();
        let err = parse("t1 + t4", 3, MonomialOrder::Grlex, &field).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 6, .. }), "{err:?}");
        assert!(matches!(
            parse("t1 +", 3, MonomialOrder::Grlex, &field),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse("t1 t2", 3, MonomialOrder::Grlex, &field),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse("u", 3, MonomialOrder::Grlex, &field),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn binary_field_coefficients() {
        let field = Field::new(8).unwrap();
        let f = parse("t1^7 - 1", 1, MonomialOrder::Grlex, &field).unwrap();
        assert_eq!(f.render(&field), "t1^7 + 1");
        let g = parse("6*t1", 1, MonomialOrder::Grlex, &field).unwrap();
        assert_eq!(g.render(&field), "6*t1");
        assert!(parse("9*t1", 1, MonomialOrder::Grlex, &field).is_err());
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(ts in prop::collection::vec((0u32..7, prop::collection::vec(0u16..4, 4)), 0..6),
                                  homog in any::<bool>()) {
            let field = Field::new(7).unwrap();
            let order = if homog { MonomialOrder::OrderH } else { MonomialOrder::Grlex };
            let f = Polynomial::from_terms(4, order, ts.into_iter().map(|(c, e)| (Fe(c), Monomial::new(e))), &field).unwrap();
            let back = parse(&f.render(&field), 4, order, &field).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
