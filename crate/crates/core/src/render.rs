//! Text, TikZ and SVG drawings of a tableau with its lines.
//!
//! Row 1 is drawn at the top. A line joining non-adjacent columns is drawn
//! as an arc so that it does not run through the boxes it skips. Gated
//! lines are dashed.

use std::fmt::Write;

use crate::construction::{Label, Line, LineSet, Section};
use crate::tableau::{MatrixUnit, Tableau};

fn entry_width(t: &Tableau) -> usize {
    t.n().to_string().len()
}

/// Plain-text diagram: the numbered rows followed by the lines, grouped by
/// the row of their starting box.
pub fn ascii(ls: &LineSet) -> String {
    let t = ls.tableau();
    let w = entry_width(t);
    let mut out = String::new();
    let _ = writeln!(out, "composition {}", t.composition());
    for u in 1..=t.height() {
        let mut row = String::new();
        for v in 1..=t.columns() {
            match t.entry(u, v) {
                Some(e) => {
                    let _ = write!(row, "[{e:>w$}]");
                }
                None => row.push_str(&" ".repeat(w + 2)),
            }
            row.push(' ');
        }
        let _ = writeln!(out, "{}", row.trim_end());
    }
    if ls.is_empty() {
        out.push_str("no lines\n");
    }
    for u in 1..=t.height() {
        let mut lines: Vec<&Line> = ls.lines().filter(|l| t.row_of(l.from) == u).collect();
        if lines.is_empty() {
            continue;
        }
        lines.sort_by_key(|l| (t.col_of(l.from), l.to));
        let _ = write!(out, "row {u}:");
        for l in lines {
            let _ = write!(out, " {}-{}->{}", l.from, l.label, l.to);
            if let Some(g) = l.gated_at {
                let _ = write!(out, "(gated@{g})");
            }
        }
        out.push('\n');
    }
    if ls.is_complete() {
        let sec = Section::from_lines(ls);
        let join = |units: &[MatrixUnit], sep: &str| {
            if units.is_empty() {
                "0".to_string()
            } else {
                units.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
            }
        };
        let _ = writeln!(out, "e = {}", join(&sec.e, " + "));
        let _ = writeln!(out, "V = span {{{}}}", join(&sec.v, ", "));
    }
    out
}

fn needs_arc(t: &Tableau, l: &Line) -> bool {
    t.col_of(l.to) - t.col_of(l.from) > 1 || t.row_of(l.from) != t.row_of(l.to)
}

/// A standalone LaTeX document with one `tikzpicture`.
pub fn tikz(ls: &LineSet) -> String {
    let t = ls.tableau();
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    out.push_str("\\begin{tikzpicture}[x=1.2cm,y=-1.2cm,\n");
    out.push_str("  box/.style={draw,minimum size=0.8cm,inner sep=0pt},\n");
    out.push_str("  line/.style={->,thick},\n");
    out.push_str("  gated/.style={->,thick,dashed}]\n");
    for b in t.boxes() {
        let _ = writeln!(
            out,
            "  \\node[box] (b{e}) at ({x},{y}) {{{e}}};",
            e = b.entry,
            x = b.col,
            y = b.row
        );
    }
    for l in ls.lines() {
        let style = if l.is_gated() { "gated" } else { "line" };
        let path = if needs_arc(t, l) { "to[bend left=25]" } else { "--" };
        let _ = writeln!(
            out,
            "  \\draw[{style}] (b{}) {path} node[midway,above,font=\\scriptsize] {{{}}} (b{});",
            l.from, l.label, l.to
        );
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

const CELL: usize = 48;
const MARGIN: usize = 24;

fn centre(col: usize, row: usize) -> (usize, usize) {
    (MARGIN + (col - 1) * CELL * 2 + CELL / 2, MARGIN + (row - 1) * CELL + CELL / 2)
}

/// A self-contained SVG document.
pub fn svg(ls: &LineSet) -> String {
    let t = ls.tableau();
    let width = 2 * MARGIN + (2 * t.columns()).saturating_sub(1) * CELL;
    let height = 2 * MARGIN + t.height() * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    out.push_str("  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n");
    let half = CELL * 3 / 8;
    for b in t.boxes() {
        let (cx, cy) = centre(b.col, b.row);
        let _ = writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>",
            cx - half,
            cy - half,
            2 * half,
            2 * half
        );
        let _ = writeln!(
            out,
            "  <text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\">{}</text>",
            cy + 5,
            b.entry
        );
    }
    for l in ls.lines() {
        let (x1, y1) = centre(t.col_of(l.from), t.row_of(l.from));
        let (x2, y2) = centre(t.col_of(l.to), t.row_of(l.to));
        let (x1, x2) = (x1 + half, x2 - half);
        let dash = if l.is_gated() { " stroke-dasharray=\"4 3\"" } else { "" };
        let colour = match l.label {
            Label::Zero => "crimson",
            Label::One => "black",
        };
        let (mx, my) = if needs_arc(t, l) {
            ((x1 + x2) / 2, y1.min(y2).saturating_sub(CELL / 3))
        } else {
            ((x1 + x2) / 2, (y1 + y2) / 2)
        };
        let _ = writeln!(
            out,
            "  <path d=\"M{x1},{y1} Q{mx},{my} {x2},{y2}\" fill=\"none\" stroke=\"{colour}\"{dash} marker-end=\"url(#arrow)\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{mx}\" y=\"{}\" text-anchor=\"middle\" font-size=\"11\" fill=\"{colour}\">{}</text>",
            my.saturating_sub(4),
            l.label
        );
    }
    out.push_str("</svg>\n");
    out
}
