//! Arithmetic in the finite field `F_q`.
//!
//! Two shapes are supported: prime fields `F_p` for odd `p <= 2^16`, and
//! binary extensions `F_{2^e}` with `e <= 8`. Elements are stored by their
//! canonical index in `0..q`: the residue for prime fields, the coefficient
//! bit-vector of the polynomial representative for binary fields.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Lexicographically smallest irreducible polynomial over `F_2` of each
/// degree `1..=8`, as bit masks (bit `i` is the coefficient of `x^i`).
pub const BINARY_MODULI: [u32; 8] = [
    0b10,        // x
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b1_0011,    // x^4 + x + 1
    0b10_0101,   // x^5 + x^2 + 1
    0b100_0011,  // x^6 + x + 1
    0b1000_0011, // x^7 + x + 1
    0x11b,       // x^8 + x^4 + x^3 + x + 1
];

const MAX_PRIME: u64 = 1 << 16;

/// A field element, identified by its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct LogTables {
    /// `exp[i] = g^i` for `i in 0..2(q-1)`, doubled so sums of logs need no reduction.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

#[derive(Clone, Debug)]
enum Repr {
    Prime,
    Binary(Arc<LogTables>),
}

/// The field `F_q`. Immutable once built; cloning is cheap.
#[derive(Clone, Debug)]
pub struct Field {
    q: u32,
    p: u32,
    e: u32,
    repr: Repr,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for Field {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Carry-less product of `a` and `b` reduced modulo `modulus` of degree `deg`.
fn clmul_mod(mut a: u32, mut b: u32, modulus: u32, deg: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> deg & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

impl Field {
    /// Builds `F_q`, failing with [`Error::UnsupportedField`] for any other shape.
    pub fn new(q: u64) -> Result<Field> {
        if q >= 2 && q.is_power_of_two() {
            let e = q.trailing_zeros();
            if (1..=8).contains(&e) {
                return Ok(Self::binary(e));
            }
        } else if q % 2 == 1 && q <= MAX_PRIME && is_prime(q) {
            return Ok(Field {
                q: q as u32,
                p: q as u32,
                e: 1,
                repr: Repr::Prime,
            });
        }
        Err(Error::UnsupportedField(q))
    }

    fn binary(e: u32) -> Field {
        let q = 1u32 << e;
        let modulus = BINARY_MODULI[(e - 1) as usize];
        let order = q - 1;
        // The modulus need not be primitive, so search for a generator of K*.
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = clmul_mod(x, g, modulus, e);
                    k += 1;
                }
                k == order
            })
            .expect("the unit group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..order {
            exp.push(x);
            log[x as usize] = i;
            x = clmul_mod(x, generator, modulus, e);
        }
        for i in 0..order as usize {
            exp.push(exp[i]);
        }
        Field {
            q,
            p: 2,
            e,
            repr: Repr::Binary(Arc::new(LogTables { exp, log })),
        }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Order of the unit group, `q - 1`.
    #[inline]
    pub fn unit_order(&self) -> u32 {
        self.q - 1
    }

    /// The element with canonical index `i`.
    pub fn element(&self, i: u32) -> Result<Fe> {
        if i < self.q {
            Ok(Fe(i))
        } else {
            Err(Error::DimensionMismatch {
                expected: self.q as usize,
                got: i as usize,
            })
        }
    }

    /// Image of an integer under `Z -> K`.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match self.repr {
            Repr::Prime => {
                let s = a.0 + b.0;
                Fe(if s >= self.p { s - self.p } else { s })
            }
            Repr::Binary(_) => Fe(a.0 ^ b.0),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        match self.repr {
            Repr::Prime if a.0 != 0 => Fe(self.p - a.0),
            _ => a,
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.repr {
            Repr::Prime => Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32),
            Repr::Binary(t) => {
                if a.0 == 0 || b.0 == 0 {
                    Fe(0)
                } else {
                    Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
                }
            }
        }
    }

    pub fn pow(&self, a: Fe, mut n: u64) -> Fe {
        if let Repr::Binary(t) = &self.repr {
            if n == 0 {
                return Fe::ONE;
            }
            if a.0 == 0 {
                return Fe::ZERO;
            }
            let l = (t.log[a.0 as usize] as u64 * (n % (self.q as u64 - 1))) % (self.q as u64 - 1);
            return Fe(t.exp[l as usize]);
        }
        let mut base = a;
        let mut acc = Fe::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Prime => self.pow(a, self.q as u64 - 2),
            Repr::Binary(t) => {
                let order = self.q - 1;
                Fe(t.exp[((order - t.log[a.0 as usize]) % order) as usize])
            }
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// All nonzero elements in index order.
    pub fn units(&self) -> Vec<Fe> {
        (1..self.q).map(Fe).collect()
    }

    /// The subgroup `{a^2 : a in K*}` in index order.
    pub fn squares(&self) -> Vec<Fe> {
        let mut hit = vec![false; self.q as usize];
        for a in 1..self.q {
            hit[self.mul(Fe(a), Fe(a)).0 as usize] = true;
        }
        (1..self.q).filter(|&i| hit[i as usize]).map(Fe).collect()
    }

    /// True iff `2` divides `q - 1`, i.e. the squares form a proper subgroup.
    #[inline]
    pub fn has_proper_squares(&self) -> bool {
        (self.q - 1).is_multiple_of(2)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "F_{}", self.q)
        } else {
            write!(f, "F_{}^{}", self.p, self.e)
        }
    }
}
