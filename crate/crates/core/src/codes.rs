//! Reed–Muller-type evaluation codes `C_X(d)` on a toric set.
//!
//! A generator matrix has one row per monomial with every exponent at most
//! `q - 2` and degree at most `d`, one column per point. Since `t^{q-1} = 1`
//! on `X*`, higher exponents add no new rows.

use serde::Serialize;

use crate::cyclegraph::ToricSet;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::poly::{Monomial, MonomialOrder};
use crate::Count;

pub const DEFAULT_DIST_BUDGET: u128 = 1 << 22;
/// Cap on `rows * columns` of a materialized evaluation matrix.
pub const DEFAULT_MATRIX_BUDGET: u128 = 1 << 28;

/// Monomials with exponents `<= max_exp` and degree `<= d`, grlex-descending.
pub fn basis_monomials(nvars: usize, max_exp: u32, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, max_exp: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left.min(max_exp) {
            exps[i] = e as u16;
            rec(i + 1, left - e, max_exp, exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, max_exp, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| MonomialOrder::Grlex.cmp(b, a));
    out
}

/// Evaluates monomials at the points of `x` through per-coordinate power tables.
struct Evaluator<'a> {
    x: &'a ToricSet,
    /// `powers[p][i][e] = x_p[i]^e` for `e <= max_exp`.
    powers: Vec<Vec<Vec<Fe>>>,
}

impl<'a> Evaluator<'a> {
    fn new(x: &'a ToricSet, max_exp: u32) -> Evaluator<'a> {
        let field = x.field();
        let powers = x
            .points()
            .map(|p| {
                p.iter()
                    .map(|&c| {
                        let mut row = Vec::with_capacity(max_exp as usize + 1);
                        let mut acc = Fe::ONE;
                        for _ in 0..=max_exp {
                            row.push(acc);
                            acc = field.mul(acc, c);
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        Evaluator { x, powers }
    }

    fn row(&self, m: &Monomial) -> Vec<Fe> {
        let field = self.x.field();
        self.powers
            .iter()
            .map(|pw| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .fold(Fe::ONE, |acc, (i, &e)| field.mul(acc, pw[i][e as usize]))
            })
            .collect()
    }
}

fn check_matrix_budget(rows: usize, cols: usize, budget: u128) -> Result<()> {
    let needed = rows as u128 * cols as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Row-major evaluation matrix of `C_X(d)`.
#[derive(Clone, Debug)]
pub struct EvaluationMatrix {
    monomials: Vec<Monomial>,
    ncols: usize,
    entries: Vec<Fe>,
}

impl EvaluationMatrix {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn nrows(&self) -> usize {
        self.monomials.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Fe]> {
        (0..self.nrows()).map(move |i| self.row(i))
    }
}

/// Builds the evaluation matrix with exponents capped at `max_exp`
/// (`q - 2` in the standard construction).
pub fn build_evaluation_matrix_capped(
    x: &ToricSet,
    d: u32,
    max_exp: u32,
    budget: u128,
) -> Result<EvaluationMatrix> {
    let monomials = basis_monomials(x.nvars(), max_exp, d);
    check_matrix_budget(monomials.len(), x.len(), budget)?;
    let ev = Evaluator::new(x, max_exp);
    let entries = monomials.iter().flat_map(|m| ev.row(m)).collect();
    Ok(EvaluationMatrix {
        monomials,
        ncols: x.len(),
        entries,
    })
}

pub fn build_evaluation_matrix(x: &ToricSet, d: u32, budget: u128) -> Result<EvaluationMatrix> {
    build_evaluation_matrix_capped(x, d, x.field().q() - 2, budget)
}

/// Incrementally maintained row echelon basis over `K`. Each stored row is
/// monic at its pivot and zero at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, ncols: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<Fe>) -> bool {
        assert_eq!(row.len(), self.ncols, "row length");
        let field = &self.field;
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            let c = row[p];
            if c.is_zero() {
                continue;
            }
            let c = field.neg(c);
            for (r, &b) in row.iter_mut().zip(basis).skip(p) {
                if !b.is_zero() {
                    *r = field.add(*r, field.mul(c, b));
                }
            }
        }
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = field.inv(row[p]).expect("nonzero pivot");
        for r in row.iter_mut().skip(p) {
            *r = field.mul(*r, inv);
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }
}

/// Rank over `K` of a list of rows.
pub fn rank<'r>(field: &Field, ncols: usize, rows: impl IntoIterator<Item = &'r [Fe]>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.to_vec());
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// `dim C_X(d)` for every `d` in `0..=dmax`, computed in one pass by feeding
/// rows in increasing degree. Rows are generated on the fly, so only the
/// echelon basis is held in memory; `budget` bounds `rows * columns`.
pub fn dimension_table(x: &ToricSet, dmax: u32, budget: u128) -> Result<Vec<usize>> {
    let max_exp = x.field().q() - 2;
    let mut monomials = basis_monomials(x.nvars(), max_exp, dmax);
    check_matrix_budget(monomials.len(), x.len(), budget)?;
    monomials.reverse();
    let ev = Evaluator::new(x, max_exp);
    let mut echelon = Echelon::new(x.field(), x.len());
    let mut out = Vec::with_capacity(dmax as usize + 1);
    let mut it = monomials.iter().peekable();
    for d in 0..=dmax {
        while let Some(m) = it.next_if(|m| m.degree() == d) {
            if !echelon.is_full() {
                echelon.insert(ev.row(m));
            }
        }
        out.push(echelon.rank());
    }
    Ok(out)
}

pub fn code_dimension(x: &ToricSet, d: u32, budget: u128) -> Result<usize> {
    Ok(*dimension_table(x, d, budget)?.last().unwrap())
}

/// `H(0..=dmax)` as evaluation-code dimensions.
pub fn hilbert_by_rank(
    x: &ToricSet,
    dmax: u32,
    budget: u128,
) -> Result<crate::hilbert::HilbertTable> {
    let values = dimension_table(x, dmax, budget)?
        .into_iter()
        .map(Count::from)
        .collect();
    Ok(crate::hilbert::HilbertTable {
        values,
        source: crate::hilbert::HilbertSource::RankOracle,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDistance {
    Exact(usize),
    /// Enumeration skipped; `lower <= delta <= upper` (trivial and Singleton bounds).
    Bracket {
        lower: usize,
        upper: usize,
    },
}

/// Minimum weight over the nonzero codewords of the span of `basis`, by
/// enumerating all `q^k` messages. Consecutive messages differ in one digit,
/// so each step is a single scaled row addition.
fn min_weight(field: &Field, basis: &[Vec<Fe>], ncols: usize) -> usize {
    let q = field.q();
    let mut word = vec![Fe::ZERO; ncols];
    let mut weight = 0usize;
    let mut digits = vec![0u32; basis.len()];
    let mut best = ncols;
    loop {
        let mut i = 0;
        loop {
            if i == basis.len() {
                return best;
            }
            let next = (digits[i] + 1) % q;
            let delta = field.sub(Fe(next), Fe(digits[i]));
            digits[i] = next;
            for (w, &b) in word.iter_mut().zip(&basis[i]) {
                if b.is_zero() {
                    continue;
                }
                let before = w.is_zero();
                *w = field.add(*w, field.mul(delta, b));
                match (before, w.is_zero()) {
                    (true, false) => weight += 1,
                    (false, true) => weight -= 1,
                    _ => {}
                }
            }
            if next != 0 {
                break;
            }
            i += 1;
        }
        if weight < best {
            best = weight;
            if best == 1 {
                return best;
            }
        }
    }
}

/// Minimum distance of `C_X(d)`: exact when `q^dim <= dist_budget`,
/// otherwise the bracket `[1, n - dim + 1]` (exact when that is `[1, 1]`).
pub fn min_distance(x: &ToricSet, d: u32, dist_budget: u128) -> Result<MinDistance> {
    let m = build_evaluation_matrix(x, d, DEFAULT_MATRIX_BUDGET)?;
    let mut echelon = Echelon::new(x.field(), x.len());
    for r in m.rows() {
        echelon.insert(r.to_vec());
        if echelon.is_full() {
            break;
        }
    }
    let k = echelon.rank();
    let n = x.len();
    let messages = (x.field().q() as u128).checked_pow(k as u32);
    match messages {
        Some(total) if total <= dist_budget => Ok(MinDistance::Exact(min_weight(
            x.field(),
            echelon.basis(),
            n,
        ))),
        // k = n: the code is all of K^n.
        _ if k == n => Ok(MinDistance::Exact(1)),
        _ => Ok(MinDistance::Bracket {
            lower: 1,
            upper: n - k + 1,
        }),
    }
}

/// Length, dimension and minimum distance of `C_X(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub q: u32,
    pub d: u32,
    pub n: usize,
    pub dimension: usize,
    pub min_distance: MinDistance,
}

impl CodeParams {
    /// `n + 1 - k - delta`, when the distance is known exactly.
    pub fn singleton_slack(&self) -> Option<i64> {
        match self.min_distance {
            MinDistance::Exact(delta) => {
                Some(self.n as i64 + 1 - self.dimension as i64 - delta as i64)
            }
            MinDistance::Bracket { .. } => None,
        }
    }
}

pub fn code_params(x: &ToricSet, d: u32, dist_budget: u128) -> Result<CodeParams> {
    let dimension = code_dimension(x, d, DEFAULT_MATRIX_BUDGET)?;
    let min_distance = min_distance(x, d, dist_budget)?;
    if let MinDistance::Exact(delta) = min_distance {
        if delta == 0 || delta > x.len() {
            return Err(Error::CheckFailed(format!(
                "minimum distance {delta} outside [1, {}]",
                x.len()
            )));
        }
    }
    Ok(CodeParams {
        q: x.field().q(),
        d,
        n: x.len(),
        dimension,
        min_distance,
    })
}

/// `k + delta <= n + 1`; `None` when the distance is only bracketed.
pub fn singleton_check(p: &CodeParams) -> Option<bool> {
    p.singleton_slack().map(|s| s >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclegraph::{enumerate_toric_set, CycleFamilySpec, DEFAULT_ENUM_BUDGET};
    use crate::hilbert::hilbert_footprint_table;

    fn toric(q: u64, spec: &str) -> ToricSet {
        let field = Field::new(q).unwrap();
        enumerate_toric_set(&spec.parse().unwrap(), &field, DEFAULT_ENUM_BUDGET).unwrap()
    }

    #[test]
    fn basis_is_grlex_descending() {
        let b = basis_monomials(2, 1, 2);
        let exps: Vec<&[u16]> = b.iter().map(|m| m.exponents()).collect();
        assert_eq!(exps, vec![&[1, 1][..], &[1, 0], &[0, 1], &[0, 0]]);
        assert_eq!(basis_monomials(3, 3, 100).len(), 64);
    }

    #[test]
    fn rank_matches_footprint() {
        for (q, spec) in [
            (5u64, "3"),
            (3, "3"),
            (7, "3"),
            (4, "3"),
            (3, "3x2"),
            (5, "5"),
        ] {
            let x = toric(q, spec);
            let s: CycleFamilySpec = spec.parse().unwrap();
            let dmax = 12;
            let ranks = dimension_table(&x, dmax, DEFAULT_MATRIX_BUDGET).unwrap();
            let fp = hilbert_footprint_table(&s, x.field(), dmax);
            for (d, &r) in ranks.iter().enumerate() {
                assert_eq!(Count::from(r), fp.values[d], "q={q} spec={spec} d={d}");
            }
        }
    }

    #[test]
    fn exponent_cap_loses_nothing() {
        let x = toric(5, "3");
        for d in 0..8 {
            let a = build_evaluation_matrix_capped(&x, d, 3, u128::MAX).unwrap();
            let b = build_evaluation_matrix_capped(&x, d, 4, u128::MAX).unwrap();
            assert_eq!(
                rank(x.field(), x.len(), a.rows()),
                rank(x.field(), x.len(), b.rows())
            );
        }
    }

    #[test]
    fn rank_is_permutation_invariant() {
        let x = toric(7, "3");
        let m = build_evaluation_matrix(&x, 3, u128::MAX).unwrap();
        let n = m.ncols();
        let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
        let permuted: Vec<Vec<Fe>> = m
            .rows()
            .map(|r| perm.iter().map(|&j| r[j]).collect())
            .collect();
        let mut reversed: Vec<&[Fe]> = m.rows().collect();
        reversed.reverse();
        let r = rank(x.field(), n, m.rows());
        assert_eq!(r, rank(x.field(), n, permuted.iter().map(Vec::as_slice)));
        assert_eq!(r, rank(x.field(), n, reversed));
    }

    #[test]
    fn small_code_parameters() {
        // X* for the triangle over F_3 has four points; degree one is [4, 4, 1].
        let x = toric(3, "3");
        let p = code_params(&x, 1, DEFAULT_DIST_BUDGET).unwrap();
        assert_eq!((p.n, p.dimension), (4, 4));
        assert_eq!(p.min_distance, MinDistance::Exact(1));
        assert_eq!(singleton_check(&p), Some(true));
        let p0 = code_params(&x, 0, DEFAULT_DIST_BUDGET).unwrap();
        assert_eq!((p0.dimension, p0.min_distance), (1, MinDistance::Exact(4)));
        let tight = code_params(&x, 0, 2).unwrap();
        assert_eq!(
            tight.min_distance,
            MinDistance::Bracket { lower: 1, upper: 4 }
        );
        assert_eq!(singleton_check(&tight), None);
        assert_eq!(
            code_params(&x, 1, 2).unwrap().min_distance,
            MinDistance::Exact(1)
        );
    }

    #[test]
    fn min_weight_matches_brute_force_over_extension_field() {
        // F_4 scalars are not integer multiples; every message must be reached.
        let x = toric(4, "3");
        let field = x.field().clone();
        let m = build_evaluation_matrix(&x, 1, u128::MAX).unwrap();
        let mut e = Echelon::new(&field, x.len());
        for r in m.rows() {
            e.insert(r.to_vec());
        }
        let basis = e.basis().to_vec();
        let k = basis.len() as u32;
        let mut brute = usize::MAX;
        for msg in 1..field.q().pow(k) {
            let mut word = vec![Fe::ZERO; x.len()];
            let mut rest = msg;
            for row in &basis {
                let c = Fe(rest % field.q());
                rest /= field.q();
                for (w, &b) in word.iter_mut().zip(row) {
                    *w = field.add(*w, field.mul(c, b));
                }
            }
            brute = brute.min(word.iter().filter(|c| !c.is_zero()).count());
        }
        assert_eq!(min_weight(&field, &basis, x.len()), brute);
    }
}
