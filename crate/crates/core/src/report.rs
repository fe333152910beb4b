//! Full verification of one composition, collected into a JSON-ready report.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::construction::{
    step1, step2, step3, verify_p1, zero_lines_of, Label, LabelMode, LineSet, Section,
};
use crate::error::Error;
use crate::invariants::{
    build_minor, check_nilfibre, generic_invariant, restrict_polynomial, section_coordinate,
    DEFAULT_DET_BOUND,
};
use crate::poly::{Polynomial, Var};
use crate::tableau::{MatrixUnit, NeighborPair, Tableau};
use crate::verify;

pub const SCHEMA: &str = "ws-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Largest minor whose generic determinant is expanded.
    pub det_bound: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            det_bound: DEFAULT_DET_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Skipped,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub pair: NeighborPair,
    pub size: usize,
    pub degree_formula: usize,
    /// `None` when the generic determinant was over the size bound.
    pub degree_observed: Option<usize>,
    pub invariant: Option<String>,
    pub restriction: Option<MatrixUnit>,
    pub sign: Option<i8>,
    pub nilfibre_zero: bool,
    pub p1: bool,
    pub p2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub composition: Vec<usize>,
    pub n: usize,
    pub g: usize,
    pub dim_m: usize,
    pub step1_lines: usize,
    pub lines: usize,
    pub zero_lines: usize,
    pub expected_rank: usize,
    pub separation_rank: usize,
    pub separation_rank_leftmost: usize,
    pub density_dim: usize,
    pub root_system: Vec<usize>,
    pub e: Vec<MatrixUnit>,
    pub v: Vec<MatrixUnit>,
    pub pairs: Vec<PairReport>,
    pub checks: BTreeMap<&'static str, Status>,
    pub failures: Vec<String>,
}

impl Report {
    /// No check failed; skipped checks do not count against a report.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.values().all(|&s| s != Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.checks.values().filter(|&&s| s == Status::Skipped).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

struct Recorder {
    checks: BTreeMap<&'static str, Status>,
    failures: Vec<String>,
}

impl Recorder {
    fn set(&mut self, name: &'static str, ok: bool, why: impl FnOnce() -> String) {
        let status = if ok { Status::Pass } else { Status::Fail };
        if !ok {
            self.failures.push(format!("{name}: {}", why()));
        }
        self.record(name, status);
    }

    /// A check keeps its worst outcome: fail over skipped over pass.
    fn record(&mut self, name: &'static str, status: Status) {
        let slot = self.checks.entry(name).or_insert(status);
        *slot = (*slot).max(status);
    }

    fn skip(&mut self, name: &'static str) {
        self.record(name, Status::Skipped);
    }

    fn fail(&mut self, name: &'static str, err: &Error) {
        self.set(name, false, || err.to_string());
    }
}

fn labelled(t: &Tableau, mode: LabelMode) -> LineSet {
    step2(&step1(t), mode).expect("step 2 applies to step-1 output")
}

/// Runs every check for one composition.
pub fn verify_composition(t: &Tableau, opts: &Options) -> Report {
    let mut rec = Recorder {
        checks: BTreeMap::new(),
        failures: Vec::new(),
    };
    let pairs = t.neighboring_pairs();
    let g = pairs.len();
    let parts = t.composition().parts();

    let horizontal = step1(t);
    let expected_step1 = parts.iter().sum::<usize>() - t.height();
    rec.set("step1_count", horizontal.len() == expected_step1, || {
        format!("{} lines, expected {expected_step1}", horizontal.len())
    });

    let right = labelled(t, LabelMode::Rightmost);
    let left = labelled(t, LabelMode::Leftmost);

    // separation, in both labellings
    let ones = right.count_label(Label::One);
    let expected_ones = (t.n() - t.columns()) - verify::gap_count(t);
    rec.set("one_line_count", ones == expected_ones, || {
        format!("|K| = {ones}, expected {expected_ones}")
    });
    let sep_right = verify::separation_rank(&right).unwrap_or(usize::MAX);
    let sep_left = verify::separation_rank(&left).unwrap_or(usize::MAX);
    rec.set("separation_rightmost", sep_right == ones, || {
        format!("rank {sep_right}, |K| = {ones}")
    });
    let ones_left = left.count_label(Label::One);
    rec.set("separation_leftmost", sep_left == ones_left, || {
        format!("rank {sep_left}, |K| = {ones_left}")
    });
    match verify::separation_witness(&right) {
        Ok(w) => rec.set("separation_witness", w.is_some(), || {
            "no triangular submatrix found".into()
        }),
        Err(e) => rec.fail("separation_witness", &e),
    }

    let root_system = match verify::root_system_type(&right) {
        Ok(r) => {
            rec.set("root_system", true, String::new);
            r
        }
        Err(e) => {
            rec.fail("root_system", &e);
            Vec::new()
        }
    };
    match verify::grading_element(&right) {
        Ok(_) => rec.set("grading", true, String::new),
        Err(e) => rec.fail("grading", &e),
    }

    let full = match step3(&right) {
        Ok(ls) => ls,
        Err(e) => {
            rec.fail("step3", &e);
            return Report {
                schema: SCHEMA,
                composition: parts.to_vec(),
                n: t.n(),
                g,
                dim_m: t.nilradical_dim(),
                step1_lines: horizontal.len(),
                lines: 0,
                zero_lines: 0,
                expected_rank: ones,
                separation_rank: sep_right,
                separation_rank_leftmost: sep_left,
                density_dim: 0,
                root_system,
                e: Vec::new(),
                v: Vec::new(),
                pairs: Vec::new(),
                checks: rec.checks,
                failures: rec.failures,
            };
        }
    };
    rec.set("step3", true, String::new);
    let section = Section::from_lines(&full);
    let zeros = full.count_label(Label::Zero);
    rec.set("zero_lines_equal_g", zeros == g && section.v.len() == g, || {
        format!("{zeros} zero lines for {g} pairs")
    });

    let mut pair_reports = Vec::with_capacity(g);
    let mut hit: BTreeSet<MatrixUnit> = BTreeSet::new();
    for pair in &pairs {
        pair_reports.push(check_pair(t, &full, &section, pair, opts, &mut rec, &mut hit));
    }
    let all_restricted = pair_reports.iter().all(|p| p.restriction.is_some());
    if all_restricted {
        let v: BTreeSet<MatrixUnit> = section.v.iter().copied().collect();
        rec.set("restriction_distinct", hit.len() == g, || {
            format!("{} distinct coordinates for {g} pairs", hit.len())
        });
        rec.set("restriction_exhausts_v", hit == v, || {
            "restrictions miss part of V".into()
        });
    } else {
        rec.set("restriction_distinct", false, || "a restriction is undefined".into());
        rec.set("restriction_exhausts_v", false, || "a restriction is undefined".into());
    }

    let density = verify::density_check(t, &full);
    rec.set("density", density.dense, || {
        format!("reached {} of {}", density.achieved, density.dim_m)
    });

    Report {
        schema: SCHEMA,
        composition: parts.to_vec(),
        n: t.n(),
        g,
        dim_m: t.nilradical_dim(),
        step1_lines: horizontal.len(),
        lines: full.len(),
        zero_lines: zeros,
        expected_rank: ones,
        separation_rank: sep_right,
        separation_rank_leftmost: sep_left,
        density_dim: density.achieved,
        root_system,
        e: section.e,
        v: section.v,
        pairs: pair_reports,
        checks: rec.checks,
        failures: rec.failures,
    }
}

fn check_pair(
    t: &Tableau,
    full: &LineSet,
    section: &Section,
    pair: &NeighborPair,
    opts: &Options,
    rec: &mut Recorder,
    hit: &mut BTreeSet<MatrixUnit>,
) -> PairReport {
    let (spec, _) = build_minor(t, pair).expect("pair comes from the tableau");
    let formula = t.bs_degree(pair).expect("pair comes from the tableau");
    let mut report = PairReport {
        pair: *pair,
        size: spec.size,
        degree_formula: formula,
        degree_observed: None,
        invariant: None,
        restriction: None,
        sign: None,
        nilfibre_zero: false,
        p1: false,
        p2: false,
    };

    match verify_p1(full, pair) {
        Ok(family) => {
            report.p1 = true;
            report.p2 = zero_lines_of(full, &family).len() == 1;
            rec.set("p1", true, String::new);
            rec.set("p2", report.p2, || format!("pair {pair} sees several 0-lines"));
        }
        Err(e) => {
            rec.fail("p1", &e);
            rec.set("p2", false, || format!("pair {pair} has no family"));
        }
    }

    match section_coordinate(t, pair, section) {
        Ok(r) => {
            report.restriction = Some(r.coordinate);
            report.sign = Some(r.sign);
            if !hit.insert(r.coordinate) {
                rec.set("restriction", false, || {
                    format!("pair {pair} repeats coordinate {}", r.coordinate)
                });
            } else {
                rec.set("restriction", true, String::new);
            }
        }
        Err(e) => rec.fail("restriction", &e),
    }

    match check_nilfibre(t, pair, section) {
        Ok(()) => {
            report.nilfibre_zero = true;
            rec.set("nilfibre", true, String::new);
        }
        Err(e) => rec.fail("nilfibre", &e),
    }

    match generic_invariant(t, pair, opts.det_bound) {
        Ok(p) => {
            let deg = p.degree().unwrap_or(0) as usize;
            report.degree_observed = Some(deg);
            rec.set("degree", deg == formula && p.is_homogeneous(), || {
                format!("pair {pair}: degree {deg}, formula {formula}")
            });
            let restricted = restrict_polynomial(&p, section);
            let agrees = match (report.restriction, report.sign) {
                (Some(u), Some(sign)) => {
                    restricted == Polynomial::var(Var::from(u)).scale(&i64::from(sign).into())
                }
                _ => false,
            };
            rec.set("generic_restriction", agrees, || {
                format!("pair {pair}: invariant restricts to {restricted}")
            });
            report.invariant = Some(p.to_string());
        }
        Err(Error::ResourceLimit { .. }) => {
            rec.skip("degree");
            rec.skip("generic_restriction");
        }
        Err(e) => rec.fail("degree", &e),
    }
    report
}
