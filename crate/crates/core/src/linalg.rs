//! Exact integer linear algebra: rank by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over the rationals of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == mat.len() {
            break;
        }
        // smallest nonzero pivot keeps the entries small
        let pivot = (rank..mat.len())
            .filter(|&r| !mat[r][col].is_zero())
            .min_by(|&a, &b| mat[a][col].abs().cmp(&mat[b][col].abs()));
        let Some(p) = pivot else { continue };
        mat.swap(rank, p);
        let (head, tail) = mat.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = row[col].gcd(&pivot_row[col]);
            let a = &pivot_row[col] / &g;
            let b = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x * &a - y * &b;
            }
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && content != BigInt::from(1) {
                for x in row.iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Looks for rows and columns `(r_1, c_1), ..., (r_k, c_k)` covering every
/// row such that `M[r_a][c_a] = ±1` and `M[r_b][c_a] = 0` for `b > a`: a
/// square submatrix that is triangular up to permutation with unit
/// diagonal. Greedy: repeatedly take a column with a single `±1` among the
/// remaining rows.
pub fn triangular_witness(rows: &[Vec<i64>]) -> Option<Vec<(usize, usize)>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut row_left = vec![true; nrows];
    let mut col_left = vec![true; ncols];
    let mut order = Vec::with_capacity(nrows);
    while order.len() < nrows {
        let pick = (0..ncols).filter(|&c| col_left[c]).find_map(|c| {
            let mut hits = (0..nrows).filter(|&r| row_left[r] && rows[r][c] != 0);
            let first = hits.next()?;
            if hits.next().is_none() && rows[first][c].abs() == 1 {
                Some((first, c))
            } else {
                None
            }
        });
        let (r, c) = pick?;
        row_left[r] = false;
        col_left[c] = false;
        order.push((r, c));
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 3);
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]), 2);
        assert_eq!(rank(&[vec![6, 4], vec![9, 6], vec![3, 2]]), 1);
    }

    #[test]
    fn witness_on_cartan() {
        // A2 Cartan matrix has no column with a single nonzero
        assert!(triangular_witness(&[vec![2, -1], vec![-1, 2]]).is_none());
        let w = triangular_witness(&[vec![1, 0, 0], vec![-1, 1, 2]]).unwrap();
        assert_eq!(w, vec![(1, 1), (0, 0)]);
    }
}
