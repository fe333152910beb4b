//! Independent reference implementations used as oracles by the
//! integration tests. Nothing here calls into the library's determinant,
//! tableau or rank code; the library's outputs are only compared against
//! what is computed here from first principles.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use ws_core::Polynomial;

/// Entry of a symbolic matrix: an integer or the coordinate `x[i,j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OEntry {
    Int(i64),
    X(usize, usize),
}

/// Sparse polynomial: sorted list of variables (with repetition) to coefficient.
pub type OPoly = BTreeMap<Vec<(usize, usize)>, i64>;

/// Box positions for a composition, indexed by entry (slot 0 unused).
pub struct Shape {
    pub parts: Vec<usize>,
    pub n: usize,
    pub col: Vec<usize>,
    pub row: Vec<usize>,
}

impl Shape {
    pub fn new(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut col = vec![0];
        let mut row = vec![0];
        for (v, &p) in parts.iter().enumerate() {
            for u in 1..=p {
                col.push(v + 1);
                row.push(u);
            }
        }
        Self {
            parts: parts.to_vec(),
            n,
            col,
            row,
        }
    }

    /// Entry in row `u` of column `v`, both 1-based.
    pub fn entry(&self, u: usize, v: usize) -> Option<usize> {
        if u == 0 || u > self.parts[v - 1] {
            return None;
        }
        Some(self.parts[..v - 1].iter().sum::<usize>() + u)
    }

    /// `(left, right, height)` for each column and the next one of the same
    /// height.
    pub fn pairs(&self) -> Vec<(usize, usize, usize)> {
        let r = self.parts.len();
        let mut out = Vec::new();
        for l in 1..=r {
            let s = self.parts[l - 1];
            if let Some(k) = (l + 1..=r).find(|&k| self.parts[k - 1] == s) {
                out.push((l, k, s));
            }
        }
        out
    }

    pub fn upper(&self, i: usize, j: usize) -> bool {
        self.col[i] < self.col[j]
    }

    pub fn dim_m(&self) -> usize {
        (1..=self.n)
            .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.upper(i, j))
            .count()
    }

    /// Row and column index sets of the minor of a pair, and the entries
    /// below row `s` strictly between the columns.
    pub fn minor_sets(&self, pair: (usize, usize, usize)) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let (l, r, s) = pair;
        let start: usize = self.parts[..l - 1].iter().sum();
        let end: usize = self.parts[..r - 1].iter().sum();
        let rows: Vec<usize> = (start + 1..=end).collect();
        let cols: Vec<usize> = (start + s + 1..=end + s).collect();
        let below = rows
            .iter()
            .copied()
            .filter(|&e| self.col[e] > l && self.row[e] > s)
            .collect();
        (rows, cols, below)
    }

    /// `sum_{i = l+1}^{r} min(s, n_i)`.
    pub fn degree_formula(&self, pair: (usize, usize, usize)) -> usize {
        let (l, r, s) = pair;
        self.parts[l..r].iter().map(|&p| p.min(s)).sum()
    }

    /// The minor with `1` on those diagonal positions where `diag` holds.
    pub fn minor(&self, pair: (usize, usize, usize), diag: impl Fn(usize) -> bool) -> Vec<Vec<OEntry>> {
        let (rows, cols, _) = self.minor_sets(pair);
        rows.iter()
            .map(|&i| {
                cols.iter()
                    .map(|&j| {
                        if self.upper(i, j) {
                            OEntry::X(i, j)
                        } else if i == j && diag(i) {
                            OEntry::Int(1)
                        } else {
                            OEntry::Int(0)
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

fn inversions(p: &[usize]) -> usize {
    let mut k = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                k += 1;
            }
        }
    }
    k
}

/// Leibniz expansion over all permutations (skipping those that hit a zero).
pub fn perm_det(m: &[Vec<OEntry>]) -> OPoly {
    fn rec(
        r: usize,
        m: &[Vec<OEntry>],
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        out: &mut OPoly,
    ) {
        let n = m.len();
        if r == n {
            let mut coef = if inversions(perm).is_multiple_of(2) { 1 } else { -1 };
            let mut vars = Vec::new();
            for (row, &c) in perm.iter().enumerate() {
                match m[row][c] {
                    OEntry::Int(k) => coef *= k,
                    OEntry::X(i, j) => vars.push((i, j)),
                }
            }
            if coef != 0 {
                vars.sort_unstable();
                let slot = out.entry(vars).or_insert(0);
                *slot += coef;
            }
            return;
        }
        for c in 0..n {
            if used[c] || m[r][c] == OEntry::Int(0) {
                continue;
            }
            used[c] = true;
            perm.push(c);
            rec(r + 1, m, used, perm, out);
            perm.pop();
            used[c] = false;
        }
    }
    let mut out = OPoly::new();
    rec(0, m, &mut vec![false; m.len()], &mut Vec::new(), &mut out);
    out.retain(|_, c| *c != 0);
    out
}

/// Highest-degree part.
pub fn top(p: &OPoly) -> OPoly {
    let d = p.keys().map(Vec::len).max().unwrap_or(0);
    p.iter()
        .filter(|(k, _)| k.len() == d)
        .map(|(k, &c)| (k.clone(), c))
        .collect()
}

/// Replaces every variable by an integer or keeps it.
pub fn substitute(m: &[Vec<OEntry>], value: impl Fn(usize, usize) -> Option<i64>) -> Vec<Vec<OEntry>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&e| match e {
                    OEntry::X(i, j) => value(i, j).map_or(e, OEntry::Int),
                    other => other,
                })
                .collect()
        })
        .collect()
}

/// Converts a library polynomial to the oracle representation.
pub fn from_library(p: &Polynomial) -> OPoly {
    let mut out = OPoly::new();
    for (mono, coef) in p.terms() {
        let mut vars = Vec::new();
        for &(v, e) in mono.powers() {
            for _ in 0..e {
                vars.push((v.i, v.j));
            }
        }
        vars.sort_unstable();
        out.insert(vars, to_i64(coef));
    }
    out
}

pub fn to_i64(c: &BigInt) -> i64 {
    c.to_i64().expect("coefficient fits in i64")
}

/// Rank over the rationals by fraction-free Gaussian elimination in `i128`.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&k| a[k][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for k in r + 1..a.len() {
            if a[k][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c], a[k][c]);
            let pivot = a[r].clone();
            for (v, p) in a[k].iter_mut().zip(&pivot) {
                *v = *v * x - p * y;
            }
            let g = a[k].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
            if g > 1 {
                for v in a[k].iter_mut() {
                    *v /= g;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All compositions of `n`, lexicographic.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

pub fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Perfect matchings from the minor's rows to its columns where row `i`
/// may go to column `j` when `allowed(i, j)` holds or, for the entries
/// below row `s`, to itself. Returns up to `cap` matchings.
pub fn matchings(
    rows: &[usize],
    cols: &[usize],
    below: &[usize],
    allowed: impl Fn(usize, usize) -> bool,
    cap: usize,
) -> Vec<Vec<(usize, usize)>> {
    let options: Vec<Vec<usize>> = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .copied()
                .filter(|&j| (i == j && below.contains(&i)) || (i != j && allowed(i, j)))
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut current = Vec::new();
    let mut used = Vec::new();
    fn rec(
        k: usize,
        rows: &[usize],
        options: &[Vec<usize>],
        used: &mut Vec<usize>,
        current: &mut Vec<(usize, usize)>,
        found: &mut Vec<Vec<(usize, usize)>>,
        cap: usize,
    ) {
        if found.len() >= cap {
            return;
        }
        if k == rows.len() {
            found.push(current.clone());
            return;
        }
        for &j in &options[k] {
            if used.contains(&j) {
                continue;
            }
            used.push(j);
            current.push((rows[k], j));
            rec(k + 1, rows, options, used, current, found, cap);
            current.pop();
            used.pop();
        }
    }
    rec(0, rows, &options, &mut used, &mut current, &mut found, cap);
    found
}
