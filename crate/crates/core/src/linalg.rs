//! Fraction-free (Bareiss) elimination over an integer type.
//!
//! Generic over any `num_integer::Integer + Signed`, so the same routine runs
//! on `i64`/`i128` for small systems and on [`crate::Integer`] when entries
//! grow. Every intermediate division is exact.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// Row-reduces `m` in place by Bareiss' rule and returns the pivot columns.
/// Rows below the rank end up zero.
fn eliminate<T: Integer + Signed + Clone>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = m[i][j].clone() * m[r][c].clone() - m[i][c].clone() * m[r][j].clone();
                m[i][j] = v / prev.clone();
            }
            m[i][c] = T::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix.
pub fn rank<T: Integer + Signed + Clone>(rows: &[Vec<T>]) -> usize {
    let mut m = rows.to_vec();
    eliminate(&mut m).len()
}

/// Determinant of a square integer matrix.
pub fn determinant<T: Integer + Signed + Clone>(a: &[Vec<T>]) -> T {
    let n = a.len();
    let mut m = a.to_vec();
    // Track row swaps for the sign.
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        T::one()
    } else {
        sign * m[n - 1][n - 1].clone()
    }
}

/// Solves the square system `a x = b` exactly; `None` when `a` is singular.
pub fn solve<T: Integer + Signed + Clone>(a: &[Vec<T>], b: &[T]) -> Option<Vec<Ratio<T>>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut x: Vec<Ratio<T>> = vec![Ratio::from_integer(T::zero()); n];
    for i in (0..n).rev() {
        let mut acc = Ratio::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc = acc - Ratio::from_integer(m[i][j].clone()) * x[j].clone();
        }
        x[i] = acc / Ratio::from_integer(m[i][i].clone());
    }
    Some(x)
}
