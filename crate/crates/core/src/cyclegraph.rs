//! Disjoint unions of odd cycles, the edge parameterization and the affine
//! toric set it defines.
//!
//! Vertices and edges are numbered block by block in component order. A
//! `k`-cycle copy occupying vertices `b+1..=b+k` has edges
//! `{b+1,b+2}, ..., {b+k-1,b+k}, {b+k,b+1}`, so edge and vertex blocks coincide
//! and the variable `t_i` of the coordinate ring belongs to edge `i`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::Count;

/// Default cap on enumeration work: cycle assignments tried plus stored coordinates.
pub const DEFAULT_ENUM_BUDGET: u128 = 1 << 26;

/// `m` disjoint copies of the `k`-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleComponent {
    pub k: u32,
    pub m: u32,
}

impl CycleComponent {
    /// `gamma = (k - 1) / 2`.
    pub fn gamma(&self) -> u32 {
        (self.k - 1) / 2
    }
}

/// One cycle copy: its length and the offset of its first variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub k: u32,
    pub offset: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.k as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleFamilySpec {
    components: Vec<CycleComponent>,
}

impl CycleFamilySpec {
    pub fn new(components: impl IntoIterator<Item = (u32, u32)>) -> Result<CycleFamilySpec> {
        let components: Vec<CycleComponent> = components
            .into_iter()
            .map(|(k, m)| CycleComponent { k, m })
            .collect();
        if components.is_empty() {
            return Err(Error::UnsupportedSpec("empty cycle family".into()));
        }
        for c in &components {
            if c.k < 3 || c.k % 2 == 0 {
                return Err(Error::Oddity(c.k));
            }
            if c.m == 0 {
                return Err(Error::Multiplicity(c.m));
            }
        }
        Ok(CycleFamilySpec { components })
    }

    /// A single `k`-cycle.
    pub fn cycle(k: u32) -> Result<CycleFamilySpec> {
        CycleFamilySpec::new([(k, 1)])
    }

    pub fn components(&self) -> &[CycleComponent] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| (c.k * c.m) as usize).sum()
    }

    /// Number of edges, which is also the number of variables `s`.
    pub fn edge_count(&self) -> usize {
        self.vertex_count()
    }

    /// Total number of cycle copies.
    pub fn copies(&self) -> usize {
        self.components.iter().map(|c| c.m as usize).sum()
    }

    /// `Some(k)` when the family is exactly one `k`-cycle.
    pub fn single_cycle(&self) -> Option<u32> {
        match self.components.as_slice() {
            [c] if c.m == 1 => Some(c.k),
            _ => None,
        }
    }

    pub fn blocks(&self) -> Vec<Block> {
        let mut offset = 0;
        let mut out = Vec::with_capacity(self.copies());
        for c in &self.components {
            for _ in 0..c.m {
                out.push(Block { k: c.k, offset });
                offset += c.k as usize;
            }
        }
        out
    }

    /// Edges as 0-based vertex pairs in variable order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.blocks()
            .iter()
            .flat_map(|b| {
                let k = b.k as usize;
                (0..k).map(move |j| (b.offset + j, b.offset + (j + 1) % k))
            })
            .collect()
    }
}

impl fmt::Display for CycleFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c.m == 1 {
                write!(f, "{}", c.k)?;
            } else {
                write!(f, "{}x{}", c.k, c.m)?;
            }
        }
        Ok(())
    }
}

fn parse_uint(text: &str, pos: usize) -> Result<u32> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            pos,
            msg: format!("expected a positive integer, found {text:?}"),
        });
    }
    text.parse().map_err(|_| Error::Parse {
        pos,
        msg: format!("integer {text} out of range"),
    })
}

impl FromStr for CycleFamilySpec {
    type Err = Error;

    /// Grammar: `item (',' item)*` with `item = k | k 'x' m`, e.g. `3x2,5`.
    fn from_str(s: &str) -> Result<CycleFamilySpec> {
        let mut items = Vec::new();
        let mut pos = 0;
        for raw in s.split(',') {
            let lead = raw.len() - raw.trim_start().len();
            let item = raw.trim();
            let start = pos + lead;
            let (k, m) = match item.split_once(['x', 'X']) {
                Some((k, m)) => {
                    let mpos = start + k.len() + 1;
                    (
                        parse_uint(k.trim_end(), start)?,
                        parse_uint(m.trim_start(), mpos + m.len() - m.trim_start().len())?,
                    )
                }
                None => (parse_uint(item, start)?, 1),
            };
            items.push((k, m));
            pos += raw.len() + 1;
        }
        CycleFamilySpec::new(items)
    }
}

/// The edge map `x -> (x_j x_k)_{edges}` on vertex weights.
pub fn theta_map(spec: &CycleFamilySpec, x: &[Fe], field: &Field) -> Result<Vec<Fe>> {
    let n = spec.vertex_count();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if let Some(i) = x.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroCoordinate(i));
    }
    Ok(spec
        .edges()
        .into_iter()
        .map(|(j, k)| field.mul(x[j], x[k]))
        .collect())
}

/// The image of `theta`, stored as sorted, deduplicated points.
#[derive(Clone, Debug)]
pub struct ToricSet {
    field: Field,
    spec: CycleFamilySpec,
    nvars: usize,
    coords: Vec<Fe>,
}

impl ToricSet {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn spec(&self) -> &CycleFamilySpec {
        &self.spec
    }

    /// Coordinates per point.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Fe] {
        &self.coords[i * self.nvars..(i + 1) * self.nvars]
    }

    pub fn points(&self) -> std::slice::ChunksExact<'_, Fe> {
        self.coords.chunks_exact(self.nvars)
    }

    pub fn contains(&self, p: &[Fe]) -> bool {
        if p.len() != self.nvars {
            return false;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.point(mid).cmp(p) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// One point per line, coordinates as canonical indices separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.coords.len() * 3);
        for p in self.points() {
            let line: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// All distinct points `(x1x2, x2x3, ..., xk x1)` for `x` in `(K*)^k`, sorted, flattened.
fn cycle_points(k: usize, field: &Field) -> Vec<Vec<Fe>> {
    let units = field.units();
    let base = units.len();
    let mut digits = vec![0usize; k];
    let mut pts = Vec::new();
    loop {
        let pt: Vec<Fe> = (0..k)
            .map(|j| field.mul(units[digits[j]], units[digits[(j + 1) % k]]))
            .collect();
        pts.push(pt);
        let mut i = 0;
        loop {
            if i == k {
                pts.sort_unstable();
                pts.dedup();
                return pts;
            }
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn over_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Enumerates `X*` one cycle copy at a time and combines the copies by
/// Cartesian product, which is valid since `theta` acts independently on each
/// vertex block. Points come out in lexicographic index order.
pub fn enumerate_toric_set(
    spec: &CycleFamilySpec,
    field: &Field,
    budget: u128,
) -> Result<ToricSet> {
    let units = field.unit_order() as u128;
    let mut work: u128 = 0;
    for b in spec.blocks() {
        work = work.saturating_add(units.saturating_pow(b.k));
    }
    over_budget(work, budget)?;

    let mut per_k: Vec<(u32, Vec<Vec<Fe>>)> = Vec::new();
    for c in spec.components() {
        if !per_k.iter().any(|(k, _)| *k == c.k) {
            per_k.push((c.k, cycle_points(c.k as usize, field)));
        }
    }
    let blocks = spec.blocks();
    let mut size: u128 = 1;
    for b in &blocks {
        let len = per_k.iter().find(|(k, _)| *k == b.k).unwrap().1.len() as u128;
        size = size.saturating_mul(len);
    }
    let s = spec.edge_count();
    over_budget(work.saturating_add(size.saturating_mul(s as u128)), budget)?;

    let mut coords: Vec<Fe> = Vec::new();
    let mut width = 0;
    for b in &blocks {
        let block_pts = &per_k.iter().find(|(k, _)| *k == b.k).unwrap().1;
        match coords.len().checked_div(width) {
            None => coords = block_pts.concat(),
            Some(rows) => {
                let mut next = Vec::with_capacity(rows * block_pts.len() * (width + b.k as usize));
                for prefix in coords.chunks_exact(width) {
                    for bp in block_pts {
                        next.extend_from_slice(prefix);
                        next.extend_from_slice(bp);
                    }
                }
                coords = next;
            }
        }
        width += b.k as usize;
    }
    Ok(ToricSet {
        field: field.clone(),
        spec: spec.clone(),
        nvars: s,
        coords,
    })
}

/// True iff `2` does not divide `q - 1`, in which case `X*` is the full torus.
pub fn is_affine_torus(q: u64) -> bool {
    (q - 1) % 2 == 1
}

/// `|X*|` in closed form: per family `(q-1)^{km}`, halved once per copy when
/// `2 | q - 1`; families multiply.
pub fn cardinality_formula(spec: &CycleFamilySpec, q: u64) -> Count {
    let unit = Count::from(q - 1);
    let torus = is_affine_torus(q);
    spec.components().iter().fold(Count::one(), |acc, c| {
        let full: Count = Pow::pow(&unit, c.k * c.m);
        if torus {
            acc * full
        } else {
            acc * (full >> c.m as usize)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings() {
        let s: CycleFamilySpec = "5".parse().unwrap();
        assert_eq!(s.components(), &[CycleComponent { k: 5, m: 1 }]);
        let s: CycleFamilySpec = "3x2,5".parse().unwrap();
        assert_eq!(
            s.components(),
            &[CycleComponent { k: 3, m: 2 }, CycleComponent { k: 5, m: 1 }]
        );
        assert_eq!(s.to_string(), "3x2,5");
        assert_eq!(s.vertex_count(), 11);
        assert_eq!(
            " 3 x 2 , 7 "
                .parse::<CycleFamilySpec>()
                .unwrap()
                .to_string(),
            "3x2,7"
        );
        assert_eq!("4".parse::<CycleFamilySpec>(), Err(Error::Oddity(4)));
        assert_eq!("1".parse::<CycleFamilySpec>(), Err(Error::Oddity(1)));
        assert_eq!(
            "3x0".parse::<CycleFamilySpec>(),
            Err(Error::Multiplicity(0))
        );
        assert!(matches!(
            "3,,5".parse::<CycleFamilySpec>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "3,5y".parse::<CycleFamilySpec>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "3x".parse::<CycleFamilySpec>(),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn edge_layout() {
        let s: CycleFamilySpec = "3x2".parse().unwrap();
        assert_eq!(
            s.edges(),
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        );
        assert_eq!(s.blocks()[1], Block { k: 3, offset: 3 });
    }

    #[test]
    fn theta_examples() {
        let field = Field::new(7).unwrap();
        let s = CycleFamilySpec::cycle(3).unwrap();
        assert_eq!(theta_map(&s, &[Fe(1); 3], &field).unwrap(), vec![Fe(1); 3]);
        let (a, b, c) = (Fe(2), Fe(3), Fe(5));
        assert_eq!(
            theta_map(&s, &[a, b, c], &field).unwrap(),
            vec![field.mul(a, b), field.mul(b, c), field.mul(c, a)]
        );
        let lam = Fe(4);
        let scaled: Vec<Fe> = [a, b, c].iter().map(|&x| field.mul(lam, x)).collect();
        let l2 = field.mul(lam, lam);
        let base = theta_map(&s, &[a, b, c], &field).unwrap();
        let got = theta_map(&s, &scaled, &field).unwrap();
        assert!(base.iter().zip(&got).all(|(&x, &y)| field.mul(l2, x) == y));
        assert_eq!(
            theta_map(&s, &[a, b], &field),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            theta_map(&s, &[a, Fe(0), c], &field),
            Err(Error::ZeroCoordinate(1))
        );
    }

    #[test]
    fn small_enumerations() {
        let f5 = Field::new(5).unwrap();
        let x = enumerate_toric_set(
            &CycleFamilySpec::cycle(5).unwrap(),
            &f5,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(x.len(), 512);
        let x = enumerate_toric_set(
            &CycleFamilySpec::cycle(3).unwrap(),
            &f5,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(x.len(), 32);
        assert!(x.contains(&[Fe(1); 3]));
        let f4 = Field::new(4).unwrap();
        let x = enumerate_toric_set(
            &CycleFamilySpec::cycle(3).unwrap(),
            &f4,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(x.len(), 27);
        assert_eq!(x.to_text().lines().next(), Some("1 1 1"));
    }

    #[test]
    fn budget_is_enforced() {
        let f5 = Field::new(5).unwrap();
        let err = enumerate_toric_set(&CycleFamilySpec::cycle(5).unwrap(), &f5, 100).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                needed: 1024,
                budget: 100
            }
        ));
    }

    #[test]
    fn closed_forms() {
        let five = CycleFamilySpec::cycle(5).unwrap();
        assert_eq!(cardinality_formula(&five, 5), Count::from(512u32));
        assert_eq!(
            cardinality_formula(&"3x2".parse().unwrap(), 4),
            Count::from(729u32)
        );
        assert_eq!(
            cardinality_formula(&"3,5".parse().unwrap(), 5),
            Count::from(16384u32)
        );
        assert!(!is_affine_torus(5));
        assert!(is_affine_torus(4));
        assert!(is_affine_torus(2));
    }
}
