//! The three-step line construction on a numbered tableau.
//!
//! Step 1 joins adjacent boxes of each row by horizontal lines. Step 2
//! labels them `1`, except for one `0` per pair of neighbouring columns.
//! Step 3 works down the rows: at stage `i`, for every pair of neighbouring
//! columns of height `i`, the ungated `0`-lines of the rows above that lie
//! between the two columns are gated, the row-`i` lines spanning the same
//! stretches are removed, and the freed endpoints are rejoined so that every
//! pair again sees a unique disjoint family of composite lines carrying a
//! single `0`.
//!
//! Lines are keyed by the entries of their endpoints and always run from a
//! column strictly left to a column strictly right.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{MatrixUnit, NeighborPair, Tableau, TableauBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Label {
    Zero,
    One,
}

impl From<Label> for u8 {
    fn from(l: Label) -> u8 {
        match l {
            Label::Zero => 0,
            Label::One => 1,
        }
    }
}

impl TryFrom<u8> for Label {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Label::Zero),
            1 => Ok(Label::One),
            _ => Err(Error::InvalidInput(format!("line label {v} is not 0 or 1"))),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Zero => "0",
            Label::One => "1",
        })
    }
}

/// Where the `0` of a neighbouring pair goes in step 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelMode {
    Leftmost,
    Rightmost,
}

impl std::str::FromStr for LabelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leftmost" => Ok(LabelMode::Leftmost),
            "rightmost" => Ok(LabelMode::Rightmost),
            _ => Err(Error::InvalidInput(format!("unknown labelling mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "lowercase")]
pub enum Stage {
    /// Step 1: unlabelled horizontal lines (all carry `1` until step 2).
    Horizontal,
    /// Step 2 applied with the given mode.
    Labelled { mode: LabelMode },
    /// Step 3 applied through row-stage `through`.
    Modified { through: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub from: usize,
    pub to: usize,
    pub label: Label,
    /// Row-stage of step 3 that drew the line; 0 for the horizontal lines.
    pub stage: usize,
    /// Row-stage of step 3 that gated the line, if any.
    pub gated_at: Option<usize>,
}

impl Line {
    pub fn is_gated(&self) -> bool {
        self.gated_at.is_some()
    }

    pub fn unit(&self) -> MatrixUnit {
        MatrixUnit {
            i: self.from,
            j: self.to,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSet {
    tableau: Tableau,
    lines: BTreeMap<(usize, usize), Line>,
    stage: Stage,
}

impl LineSet {
    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    /// Lines ordered by `(from, to)`.
    pub fn lines(&self) -> impl Iterator<Item = &Line> + '_ {
        self.lines.values()
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn get(&self, from: usize, to: usize) -> Option<&Line> {
        self.lines.get(&(from, to))
    }

    pub fn count_label(&self, label: Label) -> usize {
        self.lines.values().filter(|l| l.label == label).count()
    }

    /// True once every row-stage of step 3 has run.
    pub fn is_complete(&self) -> bool {
        match self.stage {
            Stage::Modified { through } => through >= self.tableau.height(),
            _ => false,
        }
    }

    pub fn outgoing(&self, entry: usize) -> impl Iterator<Item = &Line> + '_ {
        self.lines
            .range((entry, 0)..(entry + 1, 0))
            .map(|(_, l)| l)
    }

    pub fn incoming(&self, entry: usize) -> impl Iterator<Item = &Line> + '_ {
        self.lines.values().filter(move |l| l.to == entry)
    }

    fn insert(&mut self, from: usize, to: usize, label: Label, stage: usize) -> Result<()> {
        if self.tableau.col_of(from) >= self.tableau.col_of(to) {
            return Err(Error::Internal(format!(
                "line {from}->{to} does not run strictly left to right"
            )));
        }
        if self.lines.contains_key(&(from, to)) {
            return Err(Error::Internal(format!(
                "boxes {from} and {to} are already joined"
            )));
        }
        self.lines.insert(
            (from, to),
            Line {
                from,
                to,
                label,
                stage,
                gated_at: None,
            },
        );
        Ok(())
    }

    fn remove(&mut self, from: usize, to: usize) -> Result<Line> {
        self.lines
            .remove(&(from, to))
            .ok_or_else(|| Error::Internal(format!("no line {from}->{to} to delete")))
    }

    /// JSON document: boxes by entry, lines ordered by `(from, to)`.
    pub fn to_json(&self) -> serde_json::Value {
        let boxes: Vec<TableauBox> = self.tableau.boxes().collect();
        let lines: Vec<serde_json::Value> = self
            .lines
            .values()
            .map(|l| {
                serde_json::json!({
                    "from": l.from,
                    "to": l.to,
                    "label": u8::from(l.label),
                    "gated": l.is_gated(),
                    "gated_at": l.gated_at,
                    "stage": l.stage,
                })
            })
            .collect();
        serde_json::json!({
            "composition": self.tableau.composition().parts(),
            "stage": self.stage,
            "boxes": boxes,
            "lines": lines,
        })
    }
}

/// Step 1: every pair of boxes adjacent at some level is joined.
pub fn step1(tableau: &Tableau) -> LineSet {
    let mut lines = BTreeMap::new();
    for u in 1..=tableau.height() {
        let row = tableau.row(u);
        for w in row.windows(2) {
            lines.insert(
                (w[0].entry, w[1].entry),
                Line {
                    from: w[0].entry,
                    to: w[1].entry,
                    label: Label::One,
                    stage: 0,
                    gated_at: None,
                },
            );
        }
    }
    LineSet {
        tableau: tableau.clone(),
        lines,
        stage: Stage::Horizontal,
    }
}

/// Step 2: one `0` per neighbouring pair, every other horizontal line `1`.
///
/// Rightmost: the `0` sits on the row-`s` line leaving the last column of
/// height `>= s` before the right column of the pair. Leftmost: on the row-`s`
/// line entering the first column of height `>= s` after the left column.
pub fn step2(ls: &LineSet, mode: LabelMode) -> Result<LineSet> {
    if ls.stage != Stage::Horizontal {
        return Err(Error::InvalidState(
            "step 2 needs the horizontal lines of step 1".into(),
        ));
    }
    let t = &ls.tableau;
    let mut out = ls.clone();
    for pair in t.neighboring_pairs() {
        let s = pair.height;
        let key = match mode {
            LabelMode::Rightmost => {
                let v = (pair.left..pair.right)
                    .rev()
                    .find(|&v| t.column_height(v) >= s)
                    .expect("left column has height s");
                let from = t.entry(s, v).expect("box exists");
                out.outgoing(from)
                    .next()
                    .map(|l| (l.from, l.to))
                    .ok_or_else(|| Error::Internal(format!("box {from} has no right-going line")))?
            }
            LabelMode::Leftmost => {
                let v = ((pair.left + 1)..=pair.right)
                    .find(|&v| t.column_height(v) >= s)
                    .expect("right column has height s");
                let to = t.entry(s, v).expect("box exists");
                out.incoming(to)
                    .next()
                    .map(|l| (l.from, l.to))
                    .ok_or_else(|| Error::Internal(format!("box {to} has no left-going line")))?
            }
        };
        out.lines.get_mut(&key).expect("line exists").label = Label::Zero;
    }
    out.stage = Stage::Labelled { mode };
    Ok(out)
}

/// Step 3 through every row-stage.
pub fn step3(ls: &LineSet) -> Result<LineSet> {
    step3_through(ls, ls.tableau.height())
}

/// Step 3 through row-stage `last` (inclusive). Accepts a rightmost step-2
/// state or a partially modified one.
pub fn step3_through(ls: &LineSet, last: usize) -> Result<LineSet> {
    let first = match ls.stage {
        Stage::Labelled {
            mode: LabelMode::Rightmost,
        } => 1,
        Stage::Modified { through } => through + 1,
        Stage::Labelled {
            mode: LabelMode::Leftmost,
        } => {
            return Err(Error::InvalidState(
                "step 3 is defined for the rightmost labelling only".into(),
            ))
        }
        Stage::Horizontal => {
            return Err(Error::InvalidState(
                "step 3 needs a labelled step-2 line set".into(),
            ))
        }
    };
    let mut out = ls.clone();
    let pairs = out.tableau.neighboring_pairs();
    for stage in first..=last.min(out.tableau.height()) {
        for pair in pairs.iter().filter(|p| p.height == stage) {
            modify_pair(&mut out, pair)?;
        }
        out.stage = Stage::Modified { through: stage };
    }
    if let Stage::Labelled { .. } = out.stage {
        // nothing to do at any stage, e.g. a request through stage 0
        out.stage = Stage::Modified { through: 0 };
    }
    Ok(out)
}

/// One row-stage for one pair of neighbouring columns of height `i`.
fn modify_pair(ls: &mut LineSet, pair: &NeighborPair) -> Result<()> {
    let i = pair.height;
    let t = ls.tableau.clone();
    let within = |e: usize| pair.left <= t.col_of(e) && t.col_of(e) <= pair.right;

    let mut ungated: Vec<(usize, usize)> = ls
        .lines
        .values()
        .filter(|l| {
            l.label == Label::Zero
                && !l.is_gated()
                && t.row_of(l.from) < i
                && t.row_of(l.to) < i
                && within(l.from)
                && within(l.to)
        })
        .map(|l| (l.from, l.to))
        .collect();
    if ungated.is_empty() {
        return Ok(());
    }
    ungated.sort_by_key(|&(a, b)| (t.col_of(a), t.col_of(b)));
    for w in ungated.windows(2) {
        if t.col_of(w[0].1) > t.col_of(w[1].0) {
            return Err(Error::InvalidState(format!(
                "ungated lines {}->{} and {}->{} overlap between columns {} and {}",
                w[0].0, w[0].1, w[1].0, w[1].1, pair.left, pair.right
            )));
        }
    }
    for key in &ungated {
        ls.lines.get_mut(key).expect("line exists").gated_at = Some(i);
    }

    // The pair's columns and the columns of height > i between them cut the
    // stretch into gaps; the ungated lines fall into these gaps.
    let mut posts = vec![pair.left];
    posts.extend(((pair.left + 1)..pair.right).filter(|&v| t.column_height(v) > i));
    posts.push(pair.right);
    let last_gap = posts.len() - 2;

    let mut assigned = 0;
    for (g, post) in posts.windows(2).enumerate() {
        let (lo, hi) = (post[0], post[1]);
        let inside: Vec<(usize, usize)> = ungated
            .iter()
            .copied()
            .filter(|&(a, b)| lo <= t.col_of(a) && t.col_of(b) <= hi)
            .collect();
        if inside.is_empty() {
            continue;
        }
        assigned += inside.len();
        let left_end = t.entry(i, lo).expect("post reaches row i");
        let right_end = t.entry(i, hi).expect("post reaches row i");
        let removed = ls.remove(left_end, right_end)?;
        let closing = if g == last_gap {
            if removed.label != Label::Zero {
                return Err(Error::Internal(format!(
                    "expected the 0-line {left_end}->{right_end} at row {i}"
                )));
            }
            Label::Zero
        } else {
            Label::One
        };
        ls.insert(left_end, inside[0].1, Label::One, i)?;
        for w in inside.windows(2) {
            ls.insert(w[0].0, w[1].1, Label::One, i)?;
        }
        ls.insert(inside[inside.len() - 1].0, right_end, closing, i)?;
    }
    if assigned != ungated.len() {
        return Err(Error::InvalidState(format!(
            "an ungated line between columns {} and {} spans a column of height > {i}",
            pair.left, pair.right
        )));
    }
    Ok(())
}

/// The unique disjoint family of composite lines between two neighbouring
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositeFamily {
    pub pair: NeighborPair,
    /// One composite line per row of the left column, as the entries it visits.
    pub paths: Vec<Vec<usize>>,
    /// `sigma[i-1]` is the row of the right column reached from row `i`.
    pub sigma: Vec<usize>,
    /// Lines used, ordered by `(from, to)`.
    pub lines: Vec<(usize, usize)>,
    /// Boxes below row `s` between the columns that no composite line visits.
    pub fixed: Vec<usize>,
}

/// Entries of the region bounded by a pair, split into the row side `I`,
/// the column side `J` and the boxes `L` below row `s` strictly between.
pub(crate) fn region(t: &Tableau, pair: &NeighborPair) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let start = t.composition().offset(pair.left);
    let end = t.composition().offset(pair.right);
    let s = pair.height;
    let rows: Vec<usize> = (start + 1..=end).collect();
    let cols: Vec<usize> = (start + s + 1..=end + s).collect();
    let below: Vec<usize> = rows
        .iter()
        .copied()
        .filter(|&e| t.col_of(e) > pair.left && t.row_of(e) > s)
        .collect();
    (rows, cols, below)
}

/// Enumerates families of box-disjoint composite lines joining the two
/// columns and passing through every box of rows `1..=s` between them,
/// stopping after `cap` families. Boxes below row `s` may be passed through
/// or left alone. Gated lines are included.
pub(crate) fn enumerate_families(
    ls: &LineSet,
    pair: &NeighborPair,
    cap: usize,
) -> Vec<BTreeMap<usize, usize>> {
    let t = &ls.tableau;
    let (rows, cols, below) = region(t, pair);
    let col_set: BTreeSet<usize> = cols.iter().copied().collect();
    let below_set: BTreeSet<usize> = below.iter().copied().collect();
    let options: Vec<Vec<usize>> = rows
        .iter()
        .map(|&a| {
            let mut o: Vec<usize> = ls
                .outgoing(a)
                .filter(|l| col_set.contains(&l.to))
                .map(|l| l.to)
                .collect();
            if below_set.contains(&a) {
                o.push(a);
            }
            o
        })
        .collect();

    let mut found = Vec::new();
    let mut used = BTreeSet::new();
    let mut current = BTreeMap::new();
    fn rec(
        k: usize,
        rows: &[usize],
        options: &[Vec<usize>],
        used: &mut BTreeSet<usize>,
        current: &mut BTreeMap<usize, usize>,
        found: &mut Vec<BTreeMap<usize, usize>>,
        cap: usize,
    ) {
        if found.len() >= cap {
            return;
        }
        if k == rows.len() {
            found.push(current.clone());
            return;
        }
        for &b in &options[k] {
            if used.insert(b) {
                current.insert(rows[k], b);
                rec(k + 1, rows, options, used, current, found, cap);
                current.remove(&rows[k]);
                used.remove(&b);
            }
        }
    }
    rec(0, &rows, &options, &mut used, &mut current, &mut found, cap);
    found
}

/// Checks (P1) for a pair: exactly one disjoint family of composite lines
/// exists, and it avoids lines gated at a stage `<= s`.
pub fn verify_p1(ls: &LineSet, pair: &NeighborPair) -> Result<CompositeFamily> {
    let t = &ls.tableau;
    t.check_pair(pair)?;
    let families = enumerate_families(ls, pair, 2);
    let matching = match families.len() {
        0 => {
            return Err(Error::P1Violation {
                left: pair.left,
                right: pair.right,
                height: pair.height,
            })
        }
        1 => families.into_iter().next().expect("one family"),
        n => {
            return Err(Error::P1UniquenessViolation {
                left: pair.left,
                right: pair.right,
                height: pair.height,
                families: n,
            })
        }
    };

    let mut lines = Vec::new();
    let mut fixed = Vec::new();
    for (&a, &b) in &matching {
        if a == b {
            fixed.push(a);
            continue;
        }
        let line = ls.get(a, b).expect("family uses existing lines");
        if matches!(line.gated_at, Some(g) if g <= pair.height) {
            return Err(Error::P1Violation {
                left: pair.left,
                right: pair.right,
                height: pair.height,
            });
        }
        lines.push((a, b));
    }

    let mut paths = Vec::with_capacity(pair.height);
    let mut sigma = Vec::with_capacity(pair.height);
    for start in t.column(pair.left) {
        let mut path = vec![start];
        let mut at = start;
        while t.col_of(at) != pair.right {
            at = matching[&at];
            path.push(at);
        }
        sigma.push(t.row_of(at));
        paths.push(path);
    }
    Ok(CompositeFamily {
        pair: *pair,
        paths,
        sigma,
        lines,
        fixed,
    })
}

/// Checks (P2): the family of (P1) carries exactly one `0`.
pub fn verify_p2(ls: &LineSet, pair: &NeighborPair) -> Result<bool> {
    let family = verify_p1(ls, pair)?;
    Ok(zero_lines_of(ls, &family).len() == 1)
}

/// The `0`-labelled lines of a family.
pub fn zero_lines_of(ls: &LineSet, family: &CompositeFamily) -> Vec<(usize, usize)> {
    family
        .lines
        .iter()
        .copied()
        .filter(|&(a, b)| ls.get(a, b).map(|l| l.label) == Some(Label::Zero))
        .collect()
}

/// `e` as the units of `1`-lines and `V` as the units of `0`-lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub e: Vec<MatrixUnit>,
    pub v: Vec<MatrixUnit>,
}

impl Section {
    /// Reads off `e` and `V` from any labelled line set.
    pub fn from_lines(ls: &LineSet) -> Self {
        let mut e = Vec::new();
        let mut v = Vec::new();
        for l in ls.lines() {
            match l.label {
                Label::One => e.push(l.unit()),
                Label::Zero => v.push(l.unit()),
            }
        }
        Self { e, v }
    }

    pub fn in_e(&self, unit: &MatrixUnit) -> bool {
        self.e.binary_search(unit).is_ok()
    }

    pub fn in_v(&self, unit: &MatrixUnit) -> bool {
        self.v.binary_search(unit).is_ok()
    }
}

/// The section of a line set that has been through all of step 3.
pub fn extract_section(ls: &LineSet) -> Result<Section> {
    if !ls.is_complete() {
        return Err(Error::InvalidState(
            "the section is read off after step 3".into(),
        ));
    }
    Ok(Section::from_lines(ls))
}

/// Steps 1, 2 (rightmost) and 3 in sequence.
pub fn construct(tableau: &Tableau) -> Result<LineSet> {
    step3(&step2(&step1(tableau), LabelMode::Rightmost)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        Tableau::new(s.parse().unwrap())
    }

    fn keys(ls: &LineSet, label: Label) -> Vec<(usize, usize)> {
        ls.lines()
            .filter(|l| l.label == label)
            .map(|l| (l.from, l.to))
            .collect()
    }

    fn pair(l: usize, r: usize, h: usize) -> NeighborPair {
        NeighborPair {
            left: l,
            right: r,
            height: h,
        }
    }

    #[test]
    fn step1_golden() {
        let ls = step1(&tab("2,1,1,2"));
        let all: Vec<_> = ls.lines().map(|l| (l.from, l.to)).collect();
        assert_eq!(all, vec![(1, 3), (2, 6), (3, 4), (4, 5)]);
        let ls = step1(&tab("3,2,1,1,2,3"));
        assert_eq!(ls.len(), 9);
        assert!(ls.get(3, 12).is_some());
        assert!(step1(&tab("5")).is_empty());
    }

    #[test]
    fn step2_golden() {
        let ls = step2(&step1(&tab("2,1,1,2")), LabelMode::Rightmost).unwrap();
        assert_eq!(keys(&ls, Label::Zero), vec![(2, 6), (3, 4)]);
        assert_eq!(keys(&ls, Label::One), vec![(1, 3), (4, 5)]);
        let ls = step2(&step1(&tab("1,2,2,1")), LabelMode::Rightmost).unwrap();
        assert_eq!(keys(&ls, Label::Zero), vec![(3, 5), (4, 6)]);
        let ls = step2(&step1(&tab("1,1,1,1,1")), LabelMode::Leftmost).unwrap();
        assert_eq!(ls.count_label(Label::One), 0);
    }

    #[test]
    fn step2_modes_differ_with_tall_column_between() {
        // pair (1,3) of height 1 straddles a column of height 3
        let base = step1(&tab("1,3,1"));
        let right = step2(&base, LabelMode::Rightmost).unwrap();
        let left = step2(&base, LabelMode::Leftmost).unwrap();
        assert_eq!(keys(&right, Label::Zero), vec![(2, 5)]);
        assert_eq!(keys(&left, Label::Zero), vec![(1, 2)]);
    }

    #[test]
    fn step2_requires_step1_state() {
        let ls = step2(&step1(&tab("1,1")), LabelMode::Rightmost).unwrap();
        assert!(matches!(
            step2(&ls, LabelMode::Rightmost),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn step3_rectangular_modification() {
        let ls = construct(&tab("2,1,1,2")).unwrap();
        assert!(ls.get(2, 6).is_none());
        assert_eq!(ls.get(2, 4).unwrap().label, Label::One);
        let l36 = ls.get(3, 6).unwrap();
        assert_eq!((l36.label, l36.gated_at), (Label::Zero, None));
        assert_eq!(ls.get(3, 4).unwrap().gated_at, Some(2));
    }

    #[test]
    fn step3_rejects_leftmost_and_unlabelled() {
        let base = step1(&tab("2,1,1,2"));
        assert!(matches!(step3(&base), Err(Error::InvalidState(_))));
        let left = step2(&base, LabelMode::Leftmost).unwrap();
        assert!(matches!(step3(&left), Err(Error::InvalidState(_))));
    }

    #[test]
    fn step3_leaves_1221_alone() {
        let t = tab("1,2,2,1");
        let two = step2(&step1(&t), LabelMode::Rightmost).unwrap();
        let three = step3(&two).unwrap();
        let a: Vec<_> = two.lines().map(|l| (l.from, l.to, l.label)).collect();
        let b: Vec<_> = three.lines().map(|l| (l.from, l.to, l.label)).collect();
        assert_eq!(a, b);
        assert!(three.lines().all(|l| !l.is_gated()));
    }

    #[test]
    fn last_gap_without_ungated_lines_keeps_its_zero() {
        // the ungated 0-line 3->4 sits left of the column of height 3
        let ls = construct(&tab("2,1,1,3,2")).unwrap();
        assert_eq!(keys(&ls, Label::Zero), vec![(3, 4), (6, 9)]);
        assert!(ls.get(2, 6).is_none());
        assert_eq!(ls.get(2, 4).unwrap().label, Label::One);
        assert_eq!(ls.get(3, 6).unwrap().label, Label::One);
        for p in ls.tableau().neighboring_pairs() {
            assert!(verify_p2(&ls, &p).unwrap(), "{p}");
        }
    }

    #[test]
    fn p1_families_of_golden_example() {
        let ls = construct(&tab("2,1,1,2")).unwrap();
        let outer = verify_p1(&ls, &pair(1, 4, 2)).unwrap();
        assert_eq!(outer.paths, vec![vec![1, 3, 6], vec![2, 4, 5]]);
        assert_eq!(outer.sigma, vec![2, 1]);
        let inner = verify_p1(&ls, &pair(2, 3, 1)).unwrap();
        assert_eq!(inner.paths, vec![vec![3, 4]]);
        assert!(verify_p2(&ls, &pair(1, 4, 2)).unwrap());

        let ls = construct(&tab("1,1")).unwrap();
        let f = verify_p1(&ls, &pair(1, 2, 1)).unwrap();
        assert_eq!(f.sigma, vec![1]);
        assert!(verify_p2(&ls, &pair(1, 2, 1)).unwrap());
    }

    #[test]
    fn p2_fails_before_step3() {
        let ls = step2(&step1(&tab("2,1,1,2")), LabelMode::Rightmost).unwrap();
        let f = verify_p1(&ls, &pair(1, 4, 2)).unwrap();
        assert_eq!(zero_lines_of(&ls, &f), vec![(2, 6), (3, 4)]);
        assert!(!verify_p2(&ls, &pair(1, 4, 2)).unwrap());
    }

    #[test]
    fn p1_reports_missing_and_ambiguous_families() {
        let t = tab("1,1,1");
        let mut ls = step1(&t);
        ls.remove(1, 2).unwrap();
        assert!(matches!(
            verify_p1(&ls, &pair(1, 2, 1)),
            Err(Error::P1Violation { .. })
        ));
        let t = tab("2,2");
        let mut ls = step1(&t);
        ls.insert(1, 4, Label::One, 0).unwrap();
        ls.insert(2, 3, Label::One, 0).unwrap();
        assert!(matches!(
            verify_p1(&ls, &pair(1, 2, 2)),
            Err(Error::P1UniquenessViolation { families: 2, .. })
        ));
    }

    #[test]
    fn section_of_golden_examples() {
        let sec = extract_section(&construct(&tab("2,1,1,2")).unwrap()).unwrap();
        let u = |i, j| MatrixUnit { i, j };
        assert_eq!(sec.e, vec![u(1, 3), u(2, 4), u(4, 5)]);
        assert_eq!(sec.v, vec![u(3, 4), u(3, 6)]);
        let sec = extract_section(&construct(&tab("1,2,2,1")).unwrap()).unwrap();
        assert_eq!(sec.e, vec![u(1, 2), u(2, 4)]);
        assert_eq!(sec.v, vec![u(3, 5), u(4, 6)]);
        let sec = extract_section(&construct(&tab("4")).unwrap()).unwrap();
        assert!(sec.e.is_empty() && sec.v.is_empty());
        let two = step2(&step1(&tab("1,1")), LabelMode::Rightmost).unwrap();
        assert!(extract_section(&two).is_err());
    }

    #[test]
    fn json_is_ordered_by_endpoints() {
        let ls = construct(&tab("2,1,1,2")).unwrap();
        let doc = ls.to_json();
        let froms: Vec<(u64, u64)> = doc["lines"]
            .as_array()
            .unwrap()
            .iter()
            .map(|l| (l["from"].as_u64().unwrap(), l["to"].as_u64().unwrap()))
            .collect();
        assert_eq!(froms, vec![(1, 3), (2, 4), (3, 4), (3, 6), (4, 5)]);
        assert_eq!(doc["lines"][2]["gated"], serde_json::json!(true));
        assert_eq!(doc["stage"]["step"], "modified");
    }
}
