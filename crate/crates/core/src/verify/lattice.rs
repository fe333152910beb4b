//! Root-lattice bookkeeping for lines: weights, the separation matrix
//! against the coroots of `h'`, the root system spanned by horizontal lines,
//! and a grading element acting by `-1` on every line.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::construction::{Label, Line, LineSet, Stage};
use crate::error::{Error, Result};
use crate::linalg;
use crate::tableau::Tableau;

/// Coordinates over the simple roots `alpha_1, ..., alpha_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    /// `alpha_i + ... + alpha_{j-1}` for the unit `x[i,j]`, `i < j`.
    pub fn of_unit(n: usize, i: usize, j: usize) -> Self {
        let mut w = vec![0; n.saturating_sub(1)];
        for k in i..j {
            w[k - 1] = 1;
        }
        Weight(w)
    }

    /// Value on the simple coroot `alpha_k^vee` (1-based `k`).
    pub fn on_coroot(&self, k: usize) -> i64 {
        let mut total = 0;
        for (t, &c) in self.0.iter().enumerate() {
            total += c * cartan(t + 1, k);
        }
        total
    }

    /// Cartan inner product.
    pub fn inner(&self, other: &Weight) -> i64 {
        let mut total = 0;
        for (s, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (t, &b) in other.0.iter().enumerate() {
                total += a * b * cartan(s + 1, t + 1);
            }
        }
        total
    }
}

/// Type-A Cartan matrix entry.
pub fn cartan(a: usize, b: usize) -> i64 {
    if a == b {
        2
    } else if a.abs_diff(b) == 1 {
        -1
    } else {
        0
    }
}

pub fn line_weight(t: &Tableau, line: &Line) -> Weight {
    Weight::of_unit(t.n(), line.from, line.to)
}

fn require_step2(ls: &LineSet) -> Result<()> {
    match ls.stage() {
        Stage::Labelled { .. } => Ok(()),
        _ => Err(Error::InvalidState(
            "separation is tested on the labelled horizontal lines of step 2".into(),
        )),
    }
}

/// Rows: the `1`-lines `K`. Columns: the entries `K'` of the tableau with
/// the lowest box of every column removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationMatrix {
    pub lines: Vec<(usize, usize)>,
    pub coroots: Vec<usize>,
    pub entries: Vec<Vec<i64>>,
}

impl SeparationMatrix {
    pub fn new(ls: &LineSet) -> Result<Self> {
        require_step2(ls)?;
        let t = ls.tableau();
        let coroots: Vec<usize> = t
            .boxes()
            .filter(|b| b.row < t.column_height(b.col))
            .map(|b| b.entry)
            .collect();
        let ones: Vec<&Line> = ls.lines().filter(|l| l.label == Label::One).collect();
        let entries = ones
            .iter()
            .map(|l| {
                let w = line_weight(t, l);
                coroots.iter().map(|&k| w.on_coroot(k)).collect()
            })
            .collect();
        Ok(Self {
            lines: ones.iter().map(|l| (l.from, l.to)).collect(),
            coroots,
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        if self.coroots.is_empty() {
            return 0;
        }
        linalg::rank(&self.entries)
    }
}

pub fn separation_rank(ls: &LineSet) -> Result<usize> {
    Ok(SeparationMatrix::new(ls)?.rank())
}

/// Number of gaps in the distinct part sizes: `max part - #distinct parts`.
pub fn gap_count(t: &Tableau) -> usize {
    let mut sizes: Vec<usize> = t.composition().parts().to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    t.height() - sizes.len()
}

/// Ranks `m_u - 1` of the type-A components, one per row holding at least
/// two boxes, listed by row. The pairwise Cartan products of the line roots
/// are checked (`2` on the diagonal, `-1` when two lines share a box, `0`
/// otherwise) together with their linear independence.
pub fn root_system_type(ls: &LineSet) -> Result<Vec<usize>> {
    let t = ls.tableau();
    let lines: Vec<&Line> = ls.lines().collect();
    if lines.iter().any(|l| l.stage != 0 || t.row_of(l.from) != t.row_of(l.to)) {
        return Err(Error::InvalidState(
            "root system typing needs horizontal lines only".into(),
        ));
    }
    let weights: Vec<Weight> = lines.iter().map(|l| line_weight(t, l)).collect();
    for (a, la) in lines.iter().enumerate() {
        for (b, lb) in lines.iter().enumerate() {
            let expected = if a == b {
                2
            } else if la.from == lb.to || la.to == lb.from {
                -1
            } else {
                0
            };
            let got = weights[a].inner(&weights[b]);
            if got != expected {
                return Err(Error::Internal(format!(
                    "lines {}->{} and {}->{} pair to {got}, expected {expected}",
                    la.from, la.to, lb.from, lb.to
                )));
            }
        }
    }
    let rows: Vec<Vec<i64>> = weights.iter().map(|w| w.0.clone()).collect();
    if linalg::rank(&rows) != lines.len() {
        return Err(Error::Internal("line roots are linearly dependent".into()));
    }
    Ok((1..=t.height())
        .map(|u| t.row(u).len())
        .filter(|&m| m >= 2)
        .map(|m| m - 1)
        .collect())
}

/// Diagonal `diag(d_1, ..., d_n)` acting on `x[i,j]` by `d_i - d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingElement {
    pub d: Vec<i64>,
}

impl GradingElement {
    pub fn eigenvalue(&self, i: usize, j: usize) -> i64 {
        self.d[i - 1] - self.d[j - 1]
    }
}

/// Solves `d_i - d_j = -1` for every line `i -> j`, normalising the smallest
/// entry of each connected block to `0`.
pub fn grading_element(ls: &LineSet) -> Result<GradingElement> {
    let n = ls.tableau().n();
    let mut adj: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for l in ls.lines() {
        adj.entry(l.from).or_default().push((l.to, 1));
        adj.entry(l.to).or_default().push((l.from, -1));
    }
    let mut d: Vec<Option<i64>> = vec![None; n + 1];
    for start in 1..=n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            let da = d[a].expect("visited");
            for &(b, step) in adj.get(&a).map(Vec::as_slice).unwrap_or(&[]) {
                match d[b] {
                    None => {
                        d[b] = Some(da + step);
                        queue.push_back(b);
                    }
                    Some(db) if db != da + step => {
                        return Err(Error::Internal(format!(
                            "grading equations are inconsistent at boxes {a} and {b}"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut d: Vec<i64> = d.into_iter().skip(1).map(|x| x.expect("all visited")).collect();
    // shift each component so its minimum is zero; entry 1 of a path-shaped
    // row block already sits at the minimum
    let mut component = vec![usize::MAX; n];
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        component[start] = start;
        let mut k = 0;
        while k < members.len() {
            let a = members[k] + 1;
            for &(b, _) in adj.get(&a).map(Vec::as_slice).unwrap_or(&[]) {
                if component[b - 1] == usize::MAX {
                    component[b - 1] = start;
                    members.push(b - 1);
                }
            }
            k += 1;
        }
        let low = members.iter().map(|&m| d[m]).min().unwrap_or(0);
        for &m in &members {
            d[m] -= low;
        }
    }
    let h = GradingElement { d };
    for l in ls.lines() {
        if h.eigenvalue(l.from, l.to) != -1 {
            return Err(Error::Internal(format!(
                "grading element does not act by -1 on {}->{}",
                l.from, l.to
            )));
        }
    }
    Ok(h)
}

/// Greedy triangular `|K| x |K|` submatrix of the separation matrix.
pub fn separation_witness(ls: &LineSet) -> Result<Option<Vec<(usize, usize)>>> {
    let m = SeparationMatrix::new(ls)?;
    Ok(linalg::triangular_witness(&m.entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{step1, step2, LabelMode};

    fn labelled(c: &str, mode: LabelMode) -> LineSet {
        step2(&step1(&Tableau::new(c.parse().unwrap())), mode).unwrap()
    }

    #[test]
    fn weights_of_lines() {
        assert_eq!(Weight::of_unit(6, 1, 3).0, vec![1, 1, 0, 0, 0]);
        assert_eq!(Weight::of_unit(6, 2, 6).0, vec![0, 1, 1, 1, 1]);
        assert_eq!(Weight::of_unit(6, 4, 5).0, vec![0, 0, 0, 1, 0]);
        let w = Weight::of_unit(6, 2, 6);
        assert_eq!(w.on_coroot(2), 1);
        assert_eq!(w.on_coroot(3), 0);
        assert_eq!(w.on_coroot(1), -1);
        assert_eq!(w.inner(&w), 2);
    }

    #[test]
    fn separation_ranks() {
        let ls = labelled("3,3,1", LabelMode::Rightmost);
        assert_eq!(separation_rank(&ls).unwrap(), 3);
        let ls = labelled("1,3,3,2", LabelMode::Rightmost);
        let m = SeparationMatrix::new(&ls).unwrap();
        assert_eq!(m.rank(), m.lines.len());
        let ls = labelled("1,1,1,1", LabelMode::Rightmost);
        assert_eq!(separation_rank(&ls).unwrap(), 0);
    }

    #[test]
    fn root_system_types() {
        let ls = labelled("2,1,1,2", LabelMode::Rightmost);
        assert_eq!(root_system_type(&ls).unwrap(), vec![3, 1]);
        let ls = labelled("3,2,1,1,2,3", LabelMode::Rightmost);
        assert_eq!(root_system_type(&ls).unwrap(), vec![5, 3, 1]);
        let ls = labelled("4", LabelMode::Rightmost);
        assert!(root_system_type(&ls).unwrap().is_empty());
    }

    #[test]
    fn grading_elements() {
        let h = grading_element(&labelled("1,1", LabelMode::Rightmost)).unwrap();
        assert_eq!(h.d, vec![0, 1]);
        let h = grading_element(&labelled("2,1,1,2", LabelMode::Rightmost)).unwrap();
        assert_eq!(h.d[2] - h.d[0], 1);
        assert_eq!(h.d[3] - h.d[2], 1);
        assert_eq!(h.d[4] - h.d[3], 1);
        assert_eq!(h.d[5] - h.d[1], 1);
        let h = grading_element(&labelled("3", LabelMode::Rightmost)).unwrap();
        assert_eq!(h.d, vec![0, 0, 0]);
    }

    #[test]
    fn gaps() {
        let t = |s: &str| Tableau::new(s.parse().unwrap());
        assert_eq!(gap_count(&t("3,3,1")), 1);
        assert_eq!(gap_count(&t("3,2,1")), 0);
        assert_eq!(gap_count(&t("4")), 3);
    }

    #[test]
    fn separation_needs_step2() {
        let ls = step1(&Tableau::new("2,2".parse().unwrap()));
        assert!(separation_rank(&ls).is_err());
    }
}
