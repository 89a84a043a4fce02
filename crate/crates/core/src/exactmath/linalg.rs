use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Gauss-Jordan elimination on an `m × n` system.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Solution {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(p) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let t = &rows[pivot_row][c] * &f;
                    rows[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[n].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Underdetermined;
    }
    Solution::Unique(rows[..n].iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Matrix> {
    let n = a.len();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| if i == j { Rational::one() } else { Rational::zero() })
            .collect();
        match solve(a, &e) {
            Solution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn solves_and_inverts() {
        let a = alloc::vec![alloc::vec![int(2), int(1)], alloc::vec![int(1), int(3)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], rat(3, 5));
        assert_eq!(inv[0][1], rat(-1, 5));
        assert_eq!(inv[1][1], rat(2, 5));
        let singular = alloc::vec![alloc::vec![int(1), int(2)], alloc::vec![int(2), int(4)]];
        assert!(inverse(&singular).is_none());
        assert_eq!(solve(&singular, &[int(1), int(3)]), Solution::Inconsistent);
        assert_eq!(solve(&singular, &[int(1), int(2)]), Solution::Underdetermined);
    }
}
