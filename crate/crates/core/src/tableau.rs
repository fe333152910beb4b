//! Compositions, numbered tableaux and the combinatorics of neighbouring
//! columns.
//!
//! A composition `(n_1, ..., n_r)` of `n` fixes a standard parabolic
//! subalgebra of `sl(n)`. Its diagram has one column of height `n_v` per
//! part; the numbers `1..=n` are written down the columns from left to
//! right, so the box in row `u` of column `v` carries `u + n_1 + ... + n_{v-1}`.
//! Rows, columns and entries are all 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of positive parts. Order matters; parts are never sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("empty composition".into()));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidInput(format!(
                "part {} of the composition is zero",
                pos + 1
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n`, the sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Height of column `v` (1-based).
    pub fn part(&self, v: usize) -> usize {
        self.parts[v - 1]
    }

    /// `n^v`: the number of boxes strictly left of column `v`.
    pub fn offset(&self, v: usize) -> usize {
        self.parts[..v - 1].iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// All `2^(n-1)` compositions of `n`, in lexicographic order of their parts.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        let mut current = Vec::new();
        fn rec(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition {
                    parts: current.clone(),
                });
                return;
            }
            for first in 1..=rest {
                current.push(first);
                rec(rest - first, current, out);
                current.pop();
            }
        }
        rec(n, &mut current, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"2,1,1,2"`. Surrounding whitespace around parts is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidInput("empty composition".into()));
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("`{tok}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The box `b_{u,v}` together with its entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauBox {
    pub row: usize,
    pub col: usize,
    pub entry: usize,
}

/// Two columns of equal height `s` with no column of height `s` strictly
/// between them. Taller or shorter columns in between are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NeighborPair {
    pub left: usize,
    pub right: usize,
    pub height: usize,
}

impl fmt::Display for NeighborPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};s={})", self.left, self.right, self.height)
    }
}

/// The standard matrix unit `x_{i,j}` with `i != j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatrixUnit {
    pub i: usize,
    pub j: usize,
}

impl MatrixUnit {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidInput(format!("x[{i},{j}] is a diagonal unit")));
        }
        Ok(Self { i, j })
    }
}

impl fmt::Display for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

/// A composition with its numbered diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    composition: Composition,
    // indexed by entry; slot 0 unused
    row_of: Vec<usize>,
    col_of: Vec<usize>,
}

impl Tableau {
    pub fn new(composition: Composition) -> Self {
        let n = composition.n();
        let mut row_of = vec![0; n + 1];
        let mut col_of = vec![0; n + 1];
        let mut entry = 1;
        for (v, &h) in composition.parts().iter().enumerate() {
            for u in 1..=h {
                row_of[entry] = u;
                col_of[entry] = v + 1;
                entry += 1;
            }
        }
        Self {
            composition,
            row_of,
            col_of,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.composition.n()
    }

    /// Number of columns `r`.
    pub fn columns(&self) -> usize {
        self.composition.len()
    }

    /// `ht D`, the largest column height.
    pub fn height(&self) -> usize {
        self.composition.max_part()
    }

    pub fn column_height(&self, v: usize) -> usize {
        self.composition.part(v)
    }

    /// Entry of `b_{u,v}`, if that box exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if col == 0 || col > self.columns() || row == 0 || row > self.column_height(col) {
            return None;
        }
        Some(row + self.composition.offset(col))
    }

    pub fn box_at(&self, row: usize, col: usize) -> Option<TableauBox> {
        self.entry(row, col).map(|entry| TableauBox { row, col, entry })
    }

    pub fn box_of(&self, entry: usize) -> Result<TableauBox> {
        self.check_entry(entry)?;
        Ok(TableauBox {
            row: self.row_of[entry],
            col: self.col_of[entry],
            entry,
        })
    }

    pub fn row_of(&self, entry: usize) -> usize {
        self.row_of[entry]
    }

    pub fn col_of(&self, entry: usize) -> usize {
        self.col_of[entry]
    }

    fn check_entry(&self, entry: usize) -> Result<()> {
        if entry == 0 || entry > self.n() {
            return Err(Error::InvalidInput(format!(
                "entry {entry} outside [1,{}]",
                self.n()
            )));
        }
        Ok(())
    }

    /// All boxes ordered by entry.
    pub fn boxes(&self) -> impl Iterator<Item = TableauBox> + '_ {
        (1..=self.n()).map(move |e| TableauBox {
            row: self.row_of[e],
            col: self.col_of[e],
            entry: e,
        })
    }

    /// Boxes of row `u`, left to right.
    pub fn row(&self, u: usize) -> Vec<TableauBox> {
        (1..=self.columns())
            .filter_map(|v| self.box_at(u, v))
            .collect()
    }

    /// Entries of column `v`, top to bottom.
    pub fn column(&self, v: usize) -> std::ops::RangeInclusive<usize> {
        let start = self.composition.offset(v) + 1;
        start..=start + self.column_height(v) - 1
    }

    /// Every pair of neighbouring columns, ordered by left column.
    pub fn neighboring_pairs(&self) -> Vec<NeighborPair> {
        let parts = self.composition.parts();
        let mut out = Vec::new();
        for (v, &s) in parts.iter().enumerate() {
            if let Some(offset) = parts[v + 1..].iter().position(|&h| h == s) {
                out.push(NeighborPair {
                    left: v + 1,
                    right: v + 2 + offset,
                    height: s,
                });
            }
        }
        out
    }

    pub fn is_neighboring(&self, pair: &NeighborPair) -> bool {
        let r = self.columns();
        if pair.left == 0 || pair.left >= pair.right || pair.right > r {
            return false;
        }
        let s = pair.height;
        self.column_height(pair.left) == s
            && self.column_height(pair.right) == s
            && ((pair.left + 1)..pair.right).all(|v| self.column_height(v) != s)
    }

    pub fn check_pair(&self, pair: &NeighborPair) -> Result<()> {
        if self.is_neighboring(pair) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{pair} is not a pair of neighbouring columns of {}",
                self.composition
            )))
        }
    }

    /// `x_{i,j}` lies in the nilradical iff `i` sits in a column strictly left of `j`.
    pub fn in_nilradical(&self, unit: MatrixUnit) -> Result<bool> {
        self.check_entry(unit.i)?;
        self.check_entry(unit.j)?;
        Ok(self.col_of[unit.i] < self.col_of[unit.j])
    }

    /// All matrix units of the nilradical, ordered by `(i, j)`.
    pub fn nilradical_basis(&self) -> Vec<MatrixUnit> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.col_of[i] < self.col_of[j] {
                    out.push(MatrixUnit { i, j });
                }
            }
        }
        out
    }

    /// `(n^2 - sum n_i^2) / 2`.
    pub fn nilradical_dim(&self) -> usize {
        let n = self.n();
        let sq: usize = self.composition.parts().iter().map(|p| p * p).sum();
        (n * n - sq) / 2
    }

    /// `m_{v,v'}`: the side length of the minor attached to the pair.
    pub fn minor_size(&self, pair: &NeighborPair) -> usize {
        ((pair.left + 1)..=pair.right)
            .map(|v| self.column_height(v))
            .sum()
    }

    /// Degree of the Benlolo-Sanderson invariant of a neighbouring pair:
    /// `sum_{i=v+1}^{v'} min(s, n_i)`.
    pub fn bs_degree(&self, pair: &NeighborPair) -> Result<usize> {
        self.check_pair(pair)?;
        Ok(((pair.left + 1)..=pair.right)
            .map(|v| self.column_height(v).min(pair.height))
            .sum())
    }
}

impl From<Composition> for Tableau {
    fn from(c: Composition) -> Self {
        Tableau::new(c)
    }
}
