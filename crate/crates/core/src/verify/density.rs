//! Tangent-space dimension counts for orbits of `P` and `P'` on the
//! nilradical, done with exact integer ranks.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::construction::{LineSet, Section};
use crate::linalg;
use crate::tableau::{MatrixUnit, Tableau};

/// Acting group: the parabolic `P` or its derived group `P'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    P,
    PPrime,
}

/// A sparse matrix `sum c * E[i,j]`, diagonal entries allowed.
type Sparse = Vec<(usize, usize, i64)>;

/// Basis of the Lie algebra of `P` or `P'`: the nilradical, the off-diagonal
/// units inside each diagonal block, and either every `E[k,k]` or the
/// differences `E[k,k] - E[k+1,k+1]` inside a block.
pub fn lie_algebra_basis(t: &Tableau, group: Group) -> Vec<Sparse> {
    let mut basis: Vec<Sparse> = t
        .nilradical_basis()
        .into_iter()
        .map(|u| vec![(u.i, u.j, 1)])
        .collect();
    for v in 1..=t.columns() {
        let block: Vec<usize> = t.column(v).collect();
        for &a in &block {
            for &b in &block {
                if a != b {
                    basis.push(vec![(a, b, 1)]);
                }
            }
        }
        match group {
            Group::P => basis.extend(block.iter().map(|&k| vec![(k, k, 1)])),
            Group::PPrime => basis.extend(block.windows(2).map(|w| vec![(w[0], w[0], 1), (w[1], w[1], -1)])),
        }
    }
    basis
}

fn bracket(x: &Sparse, y: &Sparse) -> HashMap<(usize, usize), i64> {
    let mut out: HashMap<(usize, usize), i64> = HashMap::new();
    for &(a, b, c) in x {
        for &(i, j, d) in y {
            if b == i {
                *out.entry((a, j)).or_default() += c * d;
            }
            if j == a {
                *out.entry((i, b)).or_default() -= c * d;
            }
        }
    }
    out
}

/// Coordinates of `[x, point]` for every `x` in the basis, projected to the
/// nilradical.
fn tangent_rows(t: &Tableau, point: &Sparse, group: Group) -> Vec<Vec<i64>> {
    let coords: HashMap<(usize, usize), usize> = t
        .nilradical_basis()
        .into_iter()
        .enumerate()
        .map(|(k, u)| ((u.i, u.j), k))
        .collect();
    lie_algebra_basis(t, group)
        .iter()
        .map(|x| {
            let mut row = vec![0; coords.len()];
            for (key, c) in bracket(x, point) {
                if let Some(&k) = coords.get(&key) {
                    row[k] += c;
                }
            }
            row
        })
        .collect()
}

fn as_sparse(point: &[(MatrixUnit, i64)]) -> Sparse {
    point.iter().map(|&(u, c)| (u.i, u.j, c)).collect()
}

/// Codimension in the nilradical of the orbit through `point`.
pub fn codim_orbit(t: &Tableau, point: &[(MatrixUnit, i64)], group: Group) -> usize {
    let rows = tangent_rows(t, &as_sparse(point), group);
    t.nilradical_dim() - linalg::rank(&rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityOutcome {
    pub dense: bool,
    pub achieved: usize,
    pub dim_m: usize,
}

/// Dimension of `p'.(e+v) + V` with every coefficient of `e + v` equal to 1,
/// compared with the dimension of the nilradical.
pub fn density_check(t: &Tableau, ls: &LineSet) -> DensityOutcome {
    let sec = Section::from_lines(ls);
    let point: Sparse = sec.e.iter().chain(&sec.v).map(|u| (u.i, u.j, 1)).collect();
    let mut rows = tangent_rows(t, &point, Group::PPrime);
    let index: HashMap<MatrixUnit, usize> = t
        .nilradical_basis()
        .into_iter()
        .enumerate()
        .map(|(k, u)| (u, k))
        .collect();
    let dim_m = index.len();
    for u in &sec.v {
        let mut row = vec![0; dim_m];
        row[index[u]] = 1;
        rows.push(row);
    }
    let achieved = if dim_m == 0 { 0 } else { linalg::rank(&rows) };
    DensityOutcome {
        dense: achieved == dim_m,
        achieved,
        dim_m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::construct;

    fn tab(s: &str) -> Tableau {
        Tableau::new(s.parse().unwrap())
    }

    fn units(list: &[(usize, usize)]) -> Vec<(MatrixUnit, i64)> {
        list.iter().map(|&(i, j)| (MatrixUnit::new(i, j).unwrap(), 1)).collect()
    }

    #[test]
    fn basis_sizes() {
        let t = tab("2,1,1,2");
        let m = t.nilradical_dim();
        // blocks of sizes 2, 1, 1, 2: four off-diagonal units, six diagonal
        // units or two traceless differences
        assert_eq!(lie_algebra_basis(&t, Group::P).len(), m + 4 + 6);
        assert_eq!(lie_algebra_basis(&t, Group::PPrime).len(), m + 4 + 2);
    }

    #[test]
    fn bracket_of_units() {
        let b = bracket(&vec![(1, 2, 1)], &vec![(2, 3, 1)]);
        assert_eq!(b.get(&(1, 3)), Some(&1));
        let b = bracket(&vec![(2, 3, 1)], &vec![(1, 2, 1)]);
        assert_eq!(b.get(&(1, 3)), Some(&-1));
        let b = bracket(&vec![(1, 1, 1), (2, 2, -1)], &vec![(1, 2, 1)]);
        assert_eq!(b.get(&(1, 2)), Some(&2));
    }

    #[test]
    fn dense_on_small_cases() {
        for c in ["2,1,1,2", "1,2,2,1", "5", "3,2,1,1,2,3"] {
            let t = tab(c);
            let ls = construct(&t).unwrap();
            let out = density_check(&t, &ls);
            assert!(out.dense, "{c}: {out:?}");
        }
        let t = tab("2,1,1,2");
        assert_eq!(density_check(&t, &construct(&t).unwrap()).achieved, 13);
    }

    #[test]
    fn orbit_codimensions() {
        let t = tab("2,1,1,2");
        let e = units(&[(1, 3), (2, 4), (4, 5)]);
        assert_eq!(codim_orbit(&t, &e, Group::PPrime), 3);
        assert_eq!(codim_orbit(&t, &e, Group::P), 2);
        let t = tab("1,2,2,1");
        assert!(codim_orbit(&t, &units(&[(1, 2), (2, 4)]), Group::P) > 2);
        let e = units(&[(1, 2), (2, 4), (3, 5)]);
        assert_eq!(codim_orbit(&t, &e, Group::P), 2);
        // with x[5,6] added as well the orbit grows by one more dimension
        let e = units(&[(1, 2), (2, 4), (5, 6), (3, 5)]);
        assert_eq!(codim_orbit(&t, &e, Group::P), 1);
    }
}
