//! Benlolo-Sanderson minors of neighbouring column pairs and their
//! evaluations on the section, on `E`, and on generic points.
//!
//! For a pair `(C_v, C_v')` of height `s` the minor has rows
//! `I = [n^v + 1, n^v']` and columns `J = [s + n^v + 1, s + n^v']`. An entry
//! `(i, j)` is the coordinate `x[i,j]` when that unit lies in the
//! nilradical and is zero otherwise, except on the diagonal where the
//! identity translate puts a `1`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::construction::Section;
use crate::error::{Error, Result};
use crate::poly::{det, Entry, Polynomial, Subst, SymbolicMatrix, Var};
use crate::tableau::{MatrixUnit, NeighborPair, Tableau};

/// Default largest minor for which the generic determinant is expanded.
pub const DEFAULT_DET_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorSpec {
    pub pair: NeighborPair,
    /// Row indices `I`.
    pub rows: Vec<usize>,
    /// Column indices `J`.
    pub cols: Vec<usize>,
    /// `m_{v,v'}`.
    pub size: usize,
    /// `L`: entries below row `s` strictly between the columns.
    pub below: Vec<usize>,
    /// `d_{v,v'}`.
    pub degree: usize,
}

impl MinorSpec {
    pub fn new(t: &Tableau, pair: &NeighborPair) -> Result<Self> {
        t.check_pair(pair)?;
        Ok(Self::spanning(t, pair))
    }

    /// Same bookkeeping for any two columns of equal height.
    fn spanning(t: &Tableau, pair: &NeighborPair) -> Self {
        let c = t.composition();
        let s = pair.height;
        let start = c.offset(pair.left);
        let end = c.offset(pair.right);
        let rows: Vec<usize> = (start + 1..=end).collect();
        let cols: Vec<usize> = (start + s + 1..=end + s).collect();
        let below = rows
            .iter()
            .copied()
            .filter(|&e| t.col_of(e) > pair.left && t.row_of(e) > s)
            .collect();
        let degree = ((pair.left + 1)..=pair.right)
            .map(|v| t.column_height(v).min(s))
            .sum();
        Self {
            pair: *pair,
            size: rows.len(),
            rows,
            cols,
            below,
            degree,
        }
    }

    /// `I'`: rows of the minor outside `L`.
    pub fn rows_outside_below(&self) -> Vec<usize> {
        let l: BTreeSet<usize> = self.below.iter().copied().collect();
        self.rows.iter().copied().filter(|e| !l.contains(e)).collect()
    }

    /// `J'`: columns of the minor outside `L`.
    pub fn cols_outside_below(&self) -> Vec<usize> {
        let l: BTreeSet<usize> = self.below.iter().copied().collect();
        self.cols.iter().copied().filter(|e| !l.contains(e)).collect()
    }

    fn matrix(&self, t: &Tableau, diagonal: impl Fn(usize) -> bool) -> SymbolicMatrix {
        let mut m = SymbolicMatrix::zeros(self.size);
        for (r, &i) in self.rows.iter().enumerate() {
            for (c, &j) in self.cols.iter().enumerate() {
                if t.col_of(i) < t.col_of(j) {
                    m.set(r, c, Entry::Var(Var::new(i, j)));
                } else if i == j && diagonal(i) {
                    m.set(r, c, Entry::Const(BigInt::one()));
                }
            }
        }
        m
    }
}

/// The minor with `1` on the diagonal positions of `L` only: the form used
/// for evaluation on the section.
pub fn build_minor(t: &Tableau, pair: &NeighborPair) -> Result<(MinorSpec, SymbolicMatrix)> {
    let spec = MinorSpec::new(t, pair)?;
    let below: BTreeSet<usize> = spec.below.iter().copied().collect();
    let m = spec.matrix(t, |e| below.contains(&e));
    Ok((spec, m))
}

/// The minor evaluated on `1 + m`: every diagonal position carries `1`.
pub fn identity_translate_minor(
    t: &Tableau,
    pair: &NeighborPair,
) -> Result<(MinorSpec, SymbolicMatrix)> {
    let spec = MinorSpec::new(t, pair)?;
    let m = spec.matrix(t, |_| true);
    Ok((spec, m))
}

/// Top non-vanishing term of the minor on `1 + m`.
pub fn generic_invariant(t: &Tableau, pair: &NeighborPair, bound: usize) -> Result<Polynomial> {
    let (spec, m) = identity_translate_minor(t, pair)?;
    if spec.size > bound {
        return Err(Error::ResourceLimit {
            size: spec.size,
            bound,
        });
    }
    det(&m).top_term()
}

/// Same construction for two columns of equal height that need not be
/// neighbouring.
pub fn span_invariant(t: &Tableau, left: usize, right: usize, bound: usize) -> Result<Polynomial> {
    let s = t.column_height(left);
    if left >= right || right > t.columns() || t.column_height(right) != s {
        return Err(Error::InvalidInput(format!(
            "columns {left} and {right} do not have equal height"
        )));
    }
    let span = NeighborPair {
        left,
        right,
        height: s,
    };
    let spec = MinorSpec::spanning(t, &span);
    if spec.size > bound {
        return Err(Error::ResourceLimit {
            size: spec.size,
            bound,
        });
    }
    det(&spec.matrix(t, |_| true)).top_term()
}

fn substitute_entries(
    m: &SymbolicMatrix,
    value: impl Fn(MatrixUnit) -> Option<Entry>,
) -> SymbolicMatrix {
    let mut out = m.clone();
    for r in 0..m.size() {
        for c in 0..m.size() {
            if let Entry::Var(v) = m.get(r, c) {
                let unit = MatrixUnit { i: v.i, j: v.j };
                out.set(r, c, value(unit).unwrap_or(Entry::Const(BigInt::from(0))));
            }
        }
    }
    out
}

/// `e`-coordinates to `1`, `V`-coordinates kept, all others `0`.
pub fn section_matrix(m: &SymbolicMatrix, sec: &Section) -> SymbolicMatrix {
    substitute_entries(m, |u| {
        if sec.in_e(&u) {
            Some(Entry::Const(BigInt::one()))
        } else if sec.in_v(&u) {
            Some(Entry::Var(u.into()))
        } else {
            None
        }
    })
}

/// Evaluation of the minor on `1_L + e + V`.
pub fn restrict_to_section(m: &SymbolicMatrix, sec: &Section) -> Polynomial {
    det(&section_matrix(m, sec))
}

/// Evaluation of the minor on `1_L + e`, i.e. on `E` with all of `V` at zero.
pub fn restrict_to_e(m: &SymbolicMatrix, sec: &Section) -> Polynomial {
    det(&substitute_entries(m, |u| {
        sec.in_e(&u).then(|| Entry::Const(BigInt::one()))
    }))
}

/// Restriction of an arbitrary polynomial on `m` to `e + V`.
pub fn restrict_polynomial(p: &Polynomial, sec: &Section) -> Polynomial {
    let assignment: BTreeMap<Var, Subst> = p
        .variables()
        .into_iter()
        .filter_map(|v| {
            let u = MatrixUnit { i: v.i, j: v.j };
            if sec.in_v(&u) {
                None
            } else if sec.in_e(&u) {
                Some((v, Subst::one()))
            } else {
                Some((v, Subst::zero()))
            }
        })
        .collect();
    p.substitute(&assignment)
}

/// The `V`-coordinate a minor restricts to, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Restriction {
    pub coordinate: MatrixUnit,
    pub sign: i8,
}

/// Restricts the pair's minor to the section and insists on `±` one
/// `V`-coordinate.
pub fn section_coordinate(t: &Tableau, pair: &NeighborPair, sec: &Section) -> Result<Restriction> {
    let (_, m) = build_minor(t, pair)?;
    let value = restrict_to_section(&m, sec);
    let defect = || Error::SectionDefect {
        left: pair.left,
        right: pair.right,
        restriction: value.to_string(),
    };
    let (c, v) = value.as_scaled_var().ok_or_else(defect)?;
    let unit = MatrixUnit { i: v.i, j: v.j };
    if !c.abs().is_one() || !sec.in_v(&unit) {
        return Err(defect());
    }
    Ok(Restriction {
        coordinate: unit,
        sign: if c.is_positive() { 1 } else { -1 },
    })
}

/// Checks that the pair's minor vanishes on `E`.
pub fn check_nilfibre(t: &Tableau, pair: &NeighborPair, sec: &Section) -> Result<()> {
    let (_, m) = build_minor(t, pair)?;
    let value = restrict_to_e(&m, sec);
    if value.is_zero() {
        Ok(())
    } else {
        Err(Error::NilfibreViolation {
            left: pair.left,
            right: pair.right,
            restriction: value.to_string(),
        })
    }
}

/// Number of permutations whose product of entries is nonzero, capped at `cap`.
pub fn contributing_terms(m: &SymbolicMatrix, cap: usize) -> usize {
    let n = m.size();
    let options: Vec<Vec<usize>> = (0..n)
        .map(|r| (0..n).filter(|&c| !m.get(r, c).is_zero()).collect())
        .collect();
    fn rec(r: usize, options: &[Vec<usize>], used: &mut Vec<bool>, count: &mut usize, cap: usize) {
        if *count >= cap {
            return;
        }
        if r == options.len() {
            *count += 1;
            return;
        }
        for &c in &options[r] {
            if !used[c] {
                used[c] = true;
                rec(r + 1, options, used, count, cap);
                used[c] = false;
            }
        }
    }
    let mut count = 0;
    rec(0, &options, &mut vec![false; n], &mut count, cap);
    count
}
