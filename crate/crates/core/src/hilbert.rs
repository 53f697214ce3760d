//! Affine Hilbert function of `I(X*)`, the regularity index, and the
//! decomposition into Hilbert functions of degenerate tori.
//!
//! Three routes compute `H(d)`:
//!
//! * footprint: standard monomials with respect to the leading monomials of
//!   the generator set. Per cycle block these are the exponent vectors below
//!   `q - 1` with at most `gamma` coordinates at or above `(q-1)/2`; blocks
//!   combine by convolving their exact-degree counts.
//! * union formula: inclusion–exclusion over the boxes `A_H(d)` of a single
//!   cycle, one per `gamma`-subset `H`.
//! * rank: dimension of the evaluation code (see [`crate::codes`]).

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclegraph::{enumerate_toric_set, is_affine_torus, CycleFamilySpec};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::ideal::combinations;
use crate::linalg;
use crate::poly::Monomial;
use crate::{Count, Integer};

/// Counter types usable for box counts: machine integers when they are known
/// not to overflow, [`Count`] otherwise.
pub trait Accumulator: Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> {}

impl<T: Clone + Zero + One + Add<Output = T> + Sub<Output = T>> Accumulator for T {}

/// Inclusive per-variable exponent bounds `0 <= a_i <= b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxBounds(Vec<u32>);

impl BoxBounds {
    pub fn new(bounds: Vec<u32>) -> BoxBounds {
        BoxBounds(bounds)
    }

    pub fn bounds(&self) -> &[u32] {
        &self.0
    }

    /// Bounds of the degenerate torus with `full` coordinates ranging over
    /// `K*` and `k - full` over the squares: `q - 2` then `(q-1)/2 - 1`.
    pub fn degenerate(full: usize, k: usize, q: u32) -> BoxBounds {
        let (hi, lo) = (q - 2, (q - 1) / 2 - 1);
        BoxBounds((0..k).map(|i| if i < full { hi } else { lo }).collect())
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// Number of exponent vectors in the box of each exact degree `0..=dmax`.
pub fn box_degree_profile<C: Accumulator>(bounds: &BoxBounds, dmax: u32) -> Vec<C> {
    let len = dmax as usize + 1;
    let mut ways = vec![C::zero(); len];
    ways[0] = C::one();
    for &b in bounds.bounds() {
        let mut prefix = Vec::with_capacity(len);
        let mut run = C::zero();
        for w in &ways {
            run = run + w.clone();
            prefix.push(run.clone());
        }
        let b = b as usize;
        ways = (0..len)
            .map(|i| {
                if i > b {
                    prefix[i].clone() - prefix[i - b - 1].clone()
                } else {
                    prefix[i].clone()
                }
            })
            .collect();
    }
    ways
}

/// `#{a : 0 <= a_i <= b_i, sum a_i <= d}`.
pub fn count_box_degree<C: Accumulator>(bounds: &BoxBounds, d: u32) -> C {
    box_degree_profile::<C>(bounds, d)
        .into_iter()
        .fold(C::zero(), |acc, v| acc + v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HilbertSource {
    Footprint,
    UnionFormula,
    RankOracle,
}

/// `H(0), ..., H(dmax)` from one route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub values: Vec<Count>,
    pub source: HilbertSource,
}

impl HilbertTable {
    pub fn dmax(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    /// Checks `H(0) = 1`, monotonicity, the bound `|X*|`, and constancy once
    /// `|X*|` is reached.
    pub fn check_invariants(&self, cardinality: &Count) -> Result<()> {
        if self.values.first() != Some(&Count::one()) {
            return Err(Error::CheckFailed("H(0) != 1".into()));
        }
        for (d, w) in self.values.windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(Error::CheckFailed(format!(
                    "H decreases between {d} and {}",
                    d + 1
                )));
            }
            if w[0] == *cardinality && w[1] != w[0] {
                return Err(Error::CheckFailed(format!(
                    "H leaves |X*| after degree {d}"
                )));
            }
        }
        if self.values.iter().any(|v| v > cardinality) {
            return Err(Error::CheckFailed("H exceeds |X*|".into()));
        }
        Ok(())
    }
}

fn binom(n: u64, r: u64) -> Count {
    (0..r).fold(Count::one(), |acc, i| {
        acc * Count::from(n - i) / Count::from(i + 1)
    })
}

/// Exact-degree counts of standard monomials in one cycle block.
fn block_profile(k: u32, field: &Field, dmax: u32) -> Vec<Count> {
    let q = field.q();
    if !field.has_proper_squares() {
        return box_degree_profile(&BoxBounds(vec![q - 2; k as usize]), dmax);
    }
    let half = (q - 1) / 2;
    let gamma = (k - 1) / 2;
    // j coordinates in [half, q-2], the rest in [0, half-1]: x^{j*half} * L(x)^k.
    let low = box_degree_profile::<Count>(&BoxBounds(vec![half - 1; k as usize]), dmax);
    let mut out = vec![Count::zero(); dmax as usize + 1];
    for j in 0..=gamma {
        let shift = (j * half) as usize;
        let c = binom(k as u64, j as u64);
        for d in shift..out.len() {
            out[d] += &c * &low[d - shift];
        }
    }
    out
}

/// `H(0..=dmax)` by counting standard monomials.
pub fn hilbert_footprint_table(spec: &CycleFamilySpec, field: &Field, dmax: u32) -> HilbertTable {
    let len = dmax as usize + 1;
    let mut acc = vec![Count::zero(); len];
    acc[0] = Count::one();
    let mut cache: Vec<(u32, Vec<Count>)> = Vec::new();
    for b in spec.blocks() {
        if !cache.iter().any(|(k, _)| *k == b.k) {
            cache.push((b.k, block_profile(b.k, field, dmax)));
        }
        let prof = &cache.iter().find(|(k, _)| *k == b.k).unwrap().1;
        let mut next = vec![Count::zero(); len];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, p) in prof.iter().enumerate().take(len - i) {
                next[i + j] += a * p;
            }
        }
        acc = next;
    }
    let mut run = Count::zero();
    let values = acc
        .into_iter()
        .map(|v| {
            run += v;
            run.clone()
        })
        .collect();
    HilbertTable {
        values,
        source: HilbertSource::Footprint,
    }
}

pub fn hilbert_footprint(spec: &CycleFamilySpec, field: &Field, d: u32) -> Count {
    hilbert_footprint_table(spec, field, d)
        .values
        .pop()
        .unwrap()
}

/// Slow oracle: walks every monomial of degree `<= d` and counts those not
/// divisible by any of `leading`.
pub fn footprint_walk(leading: &[Monomial], nvars: usize, d: u32) -> u64 {
    fn walk(i: usize, left: u32, exps: &mut Vec<u16>, leading: &[Monomial], count: &mut u64) {
        if i == exps.len() {
            let m = Monomial::new(exps.clone());
            if !leading.iter().any(|l| l.divides(&m)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            exps[i] = e as u16;
            walk(i + 1, left - e, exps, leading, count);
        }
        exps[i] = 0;
    }
    let mut count = 0;
    walk(0, d, &mut vec![0; nvars], leading, &mut count);
    count
}

/// Largest family size accepted by the union formula (`2^r` subfamilies).
pub const MAX_UNION_SETS: usize = 24;

/// Inclusion–exclusion coefficient of each intersection size: entry `i` sums
/// `(-1)^{|F|+1}` over nonempty subfamilies `F` of `family` whose common
/// intersection has `i` elements. Sets are bit masks.
fn inclusion_exclusion(family: &[u64], width: usize) -> Vec<i64> {
    fn rec(family: &[u64], start: usize, inter: u64, size: usize, coef: &mut [i64]) {
        for i in start..family.len() {
            let next = inter & family[i];
            let sign = if size.is_multiple_of(2) { 1 } else { -1 };
            coef[next.count_ones() as usize] += sign;
            rec(family, i + 1, next, size + 1, coef);
        }
    }
    let mut coef = vec![0i64; width + 1];
    rec(family, 0, u64::MAX, 0, &mut coef);
    coef
}

fn gamma_subsets(k: u32) -> Vec<u64> {
    combinations(k as usize, (k as usize - 1) / 2)
        .into_iter()
        .map(|h| h.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect()
}

fn check_single_cycle(k: u32, field: &Field) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Oddity(k));
    }
    if !field.has_proper_squares() {
        return Err(Error::UnsupportedSpec(format!(
            "2 does not divide q - 1 = {}",
            field.unit_order()
        )));
    }
    Ok(())
}

/// Signed multiplicities of the intersection sizes `0..=gamma` in the union
/// formula for a single `k`-cycle.
pub fn union_coefficients(k: u32) -> Result<Vec<Integer>> {
    let family = gamma_subsets(k);
    if family.len() > MAX_UNION_SETS {
        return Err(Error::UnsupportedSpec(format!(
            "union formula over {} sets exceeds the limit of {MAX_UNION_SETS}",
            family.len()
        )));
    }
    let gamma = (k as usize - 1) / 2;
    let coef = inclusion_exclusion(&family, k as usize);
    debug_assert!(coef[gamma + 1..].iter().all(|&c| c == 0));
    Ok(coef[..=gamma].iter().map(|&c| Integer::from(c)).collect())
}

/// `H(d) = |A_{H_1}(d) ∪ ... ∪ A_{H_r}(d)|` for a single `k`-cycle.
pub fn hilbert_union_formula(k: u32, field: &Field, d: u32) -> Result<Count> {
    check_single_cycle(k, field)?;
    let coef = union_coefficients(k)?;
    let mut total = Integer::zero();
    for (i, c) in coef.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let size: Count = count_box_degree(&BoxBounds::degenerate(i, k as usize, field.q()), d);
        total += c * Integer::from(size);
    }
    total
        .to_biguint()
        .ok_or_else(|| Error::CheckFailed("negative union count".into()))
}

pub fn hilbert_union_table(k: u32, field: &Field, dmax: u32) -> Result<HilbertTable> {
    let values = (0..=dmax)
        .map(|d| hilbert_union_formula(k, field, d))
        .collect::<Result<_>>()?;
    Ok(HilbertTable {
        values,
        source: HilbertSource::UnionFormula,
    })
}

/// Hilbert function of the degenerate torus `(K*)^i x S^{k-i}`, `S` the squares.
pub fn degenerate_torus_hilbert(i: u32, k: u32, field: &Field, d: u32) -> Result<Count> {
    check_single_cycle(k, field)?;
    if i > k {
        return Err(Error::DimensionMismatch {
            expected: k as usize,
            got: i as usize,
        });
    }
    Ok(count_box_degree(
        &BoxBounds::degenerate(i as usize, k as usize, field.q()),
        d,
    ))
}

/// `sum_i m_i (k_i + gamma_i) (q-1)/2 - k_i m_i`, or `None` in the torus case
/// where the closed form does not apply.
pub fn regularity_formula(spec: &CycleFamilySpec, q: u64) -> Option<u64> {
    if is_affine_torus(q) {
        return None;
    }
    let half = (q - 1) / 2;
    Some(
        spec.components()
            .iter()
            .map(|c| {
                let (k, m, g) = (c.k as u64, c.m as u64, c.gamma() as u64);
                m * (k + g) * half - k * m
            })
            .sum(),
    )
}

/// Least `d` with footprint `H(d) = |X*|`, `|X*|` taken from enumeration.
pub fn regularity_bruteforce(spec: &CycleFamilySpec, field: &Field, budget: u128) -> Result<u64> {
    let x = enumerate_toric_set(spec, field, budget)?;
    let target = Count::from(x.len());
    // No standard monomial has degree above s(q-2).
    let dmax = spec.edge_count() as u32 * (field.q() - 2);
    let table = hilbert_footprint_table(spec, field, dmax);
    table
        .values
        .iter()
        .position(|v| *v == target)
        .map(|d| d as u64)
        .ok_or_else(|| Error::CheckFailed(format!("footprint never reaches |X*| = {target}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaDecomposition {
    pub k: u32,
    pub q: u32,
    /// `beta_0, ..., beta_gamma`.
    pub betas: Vec<Integer>,
    /// Degrees whose equations formed the solved system.
    pub sample_degrees: Vec<u32>,
    /// The identity was checked for every `1 <= d <= verified_through`.
    pub verified_through: u32,
}

fn degenerate_row(k: u32, field: &Field, d: u32) -> Vec<BigInt> {
    let gamma = (k - 1) / 2;
    (0..=gamma)
        .map(|i| {
            let c: Count =
                count_box_degree(&BoxBounds::degenerate(i as usize, k as usize, field.q()), d);
            BigInt::from(c)
        })
        .collect()
}

/// Solves `sum_i beta_i H_{X_i*}(d) = H_{X*}(d)` exactly for a single
/// `k`-cycle. Degrees are taken from `sample_degrees` first, then `1, 2, ...`
/// up to the regularity and finally `0`, keeping only equations that raise
/// the rank. The solution must be integral and is re-checked for every
/// `1 <= d <= reg + 1`.
pub fn solve_betas(k: u32, field: &Field, sample_degrees: &[u32]) -> Result<BetaDecomposition> {
    check_single_cycle(k, field)?;
    let spec = CycleFamilySpec::cycle(k)?;
    let reg = regularity_formula(&spec, field.q() as u64).expect("checked non-torus") as u32;
    let unknowns = ((k - 1) / 2 + 1) as usize;
    let footprint = hilbert_footprint_table(&spec, field, reg + 1);

    let mut candidates: Vec<u32> = sample_degrees.to_vec();
    candidates.extend((1..=reg).filter(|d| !sample_degrees.contains(d)));
    if !candidates.contains(&0) {
        candidates.push(0);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();
    let mut chosen = Vec::new();
    for d in candidates {
        if rows.len() == unknowns {
            break;
        }
        let row = degenerate_row(k, field, d);
        rows.push(row);
        if linalg::rank(&rows) < rows.len() {
            rows.pop();
            continue;
        }
        let h = if d <= reg + 1 {
            footprint.values[d as usize].clone()
        } else {
            hilbert_footprint(&spec, field, d)
        };
        rhs.push(BigInt::from(h));
        chosen.push(d);
    }
    if rows.len() < unknowns {
        return Err(Error::SingularSystem(reg));
    }
    let solution = linalg::solve(&rows, &rhs).ok_or(Error::SingularSystem(reg))?;
    let mut betas = Vec::with_capacity(unknowns);
    for r in solution {
        if !r.is_integer() {
            return Err(Error::NonIntegerBeta(r.to_string()));
        }
        betas.push(r.to_integer());
    }
    for d in 1..=reg + 1 {
        let combo: BigInt = degenerate_row(k, field, d)
            .iter()
            .zip(&betas)
            .map(|(h, b)| h * b)
            .sum();
        if combo != BigInt::from(footprint.values[d as usize].clone()) {
            return Err(Error::CheckFailed(format!(
                "beta identity fails at d = {d}"
            )));
        }
    }
    Ok(BetaDecomposition {
        k,
        q: field.q(),
        betas,
        sample_degrees: chosen,
        verified_through: reg + 1,
    })
}
