//! ASCII and SVG drawings of paths, marked paths, Schröder paths, trees and
//! lattice path pairs.
//!
//! ASCII paths put one row per height band, highest first: `/` for an
//! upstep, `\` for a downstep, `==` for a flat. A marked path is drawn
//! with a spare column at each vertex so that a `*` can sit just above
//! every marked vertex.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::enumerate::Object;
use crate::error::{Error, Result};
use crate::grid::GridPathPair;
use crate::marked::MarkedPath;
use crate::path::{Path, Step};
use crate::schroder::{SchroderPath, SchroderStep};
use crate::tree::OrderedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Ascii,
    Svg,
}

impl FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Style> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" | "text" => Ok(Style::Ascii),
            "svg" => Ok(Style::Svg),
            _ => Err(Error::UnknownStyle(s.to_string())),
        }
    }
}

#[derive(Default)]
struct Canvas {
    bands: BTreeMap<i32, Vec<char>>,
}

impl Canvas {
    fn put(&mut self, band: i32, col: usize, ch: char) {
        let row = self.bands.entry(band).or_default();
        if row.len() <= col {
            row.resize(col + 1, ' ');
        }
        row[col] = ch;
    }

    fn finish(self) -> String {
        let (Some(&lo), Some(&hi)) = (self.bands.keys().next(), self.bands.keys().last()) else {
            return String::new();
        };
        (lo..=hi)
            .rev()
            .map(|b| {
                let row: String = self
                    .bands
                    .get(&b)
                    .map(|r| r.iter().collect())
                    .unwrap_or_default();
                row.trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn ascii_path(p: &Path) -> String {
    let mut c = Canvas::default();
    for (i, s) in p.steps().enumerate() {
        let h = p.height(i);
        match s {
            Step::U => c.put(h, i, '/'),
            Step::D => c.put(h - 1, i, '\\'),
        }
    }
    c.finish()
}

pub fn ascii_marked(m: &MarkedPath) -> String {
    let p = &m.path;
    let mut c = Canvas::default();
    for (i, s) in p.steps().enumerate() {
        let h = p.height(i);
        match s {
            Step::U => c.put(h, 2 * i + 1, '/'),
            Step::D => c.put(h - 1, 2 * i + 1, '\\'),
        }
    }
    for &v in &m.marks {
        c.put(p.height(v), 2 * v, '*');
    }
    c.finish()
}

pub fn ascii_schroder(s: &SchroderPath) -> String {
    let mut c = Canvas::default();
    let mut h = 0;
    let mut col = 0;
    for &step in s.steps() {
        match step {
            SchroderStep::U => {
                c.put(h, col, '/');
                col += 1;
            }
            SchroderStep::D => {
                c.put(h - 1, col, '\\');
                col += 1;
            }
            SchroderStep::F => {
                c.put(h, col, '=');
                c.put(h, col + 1, '=');
                col += 2;
            }
        }
        h += step.delta();
    }
    c.finish()
}

/// Outline with one `o` per vertex, children indented under `+-`.
pub fn ascii_tree(t: &OrderedTree) -> String {
    fn walk(t: &OrderedTree, prefix: &str, out: &mut Vec<String>) {
        let n = t.children.len();
        for (i, c) in t.children.iter().enumerate() {
            let last = i + 1 == n;
            out.push(format!("{prefix}+-o"));
            let next = format!("{prefix}{}", if last { "  " } else { "| " });
            walk(c, &next, out);
        }
    }
    let mut out = vec!["o".to_string()];
    walk(t, "", &mut out);
    out.join("\n")
}

/// Lattice points: `b` on the bottom path, `t` on the top, `.` elsewhere.
pub fn ascii_pair(pair: &GridPathPair) -> String {
    let bp = pair.bottom.points();
    let tp = pair.top.points();
    let all = bp.iter().chain(&tp);
    let xmax = all.clone().map(|p| p.0).max().unwrap_or(0).max(0);
    let ymax = all.map(|p| p.1).max().unwrap_or(0).max(0);
    let mut rows = Vec::new();
    for y in (0..=ymax).rev() {
        let row: String = (0..=xmax)
            .map(|x| {
                if bp.contains(&(x, y)) {
                    'b'
                } else if tp.contains(&(x, y)) {
                    't'
                } else {
                    '.'
                }
            })
            .collect();
        rows.push(row);
    }
    rows.join("\n")
}

const UNIT: i32 = 20;
const PAD: i32 = 10;

fn svg_open(out: &mut String, w: i32, h: i32) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w + 2 * PAD,
        h + 2 * PAD,
        w + 2 * PAD,
        h + 2 * PAD
    );
}

fn svg_polyline(out: &mut String, pts: &[(i32, i32)], top: i32, colour: &str) {
    let list: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{},{}", PAD + x * UNIT, PAD + (top - y) * UNIT))
        .collect();
    let _ = writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
        list.join(" ")
    );
}

fn svg_dot(out: &mut String, x: i32, y: i32, top: i32) {
    let _ = writeln!(
        out,
        r#"  <circle cx="{}" cy="{}" r="4" fill="black"/>"#,
        PAD + x * UNIT,
        PAD + (top - y) * UNIT
    );
}

fn svg_walk(points: &[(i32, i32)], marks: &[(i32, i32)]) -> String {
    let top = points.iter().map(|p| p.1).max().unwrap_or(0);
    let bottom = points.iter().map(|p| p.1).min().unwrap_or(0);
    let width = points.iter().map(|p| p.0).max().unwrap_or(0);
    let mut out = String::new();
    svg_open(&mut out, width * UNIT, (top - bottom) * UNIT);
    svg_polyline(&mut out, points, top, "black");
    for &(x, y) in marks {
        svg_dot(&mut out, x, y, top);
    }
    out.push_str("</svg>\n");
    out
}

/// Polyline with unit steps; marked vertices as filled circles.
pub fn svg_path(p: &Path, marks: &[usize]) -> String {
    let h = p.heights();
    let pts: Vec<(i32, i32)> = h.iter().enumerate().map(|(i, &y)| (i as i32, y)).collect();
    let dots: Vec<(i32, i32)> = marks.iter().map(|&v| pts[v]).collect();
    svg_walk(&pts, &dots)
}

pub fn svg_schroder(s: &SchroderPath) -> String {
    let mut pts = vec![(0, 0)];
    let (mut x, mut y) = (0, 0);
    for &step in s.steps() {
        x += if step == SchroderStep::F { 2 } else { 1 };
        y += step.delta();
        pts.push((x, y));
    }
    svg_walk(&pts, &[])
}

pub fn svg_tree(t: &OrderedTree) -> String {
    // leaves take successive columns; a parent sits over its outer children
    fn place(
        t: &OrderedTree,
        depth: i32,
        next: &mut i32,
        nodes: &mut Vec<(i32, i32)>,
        edges: &mut Vec<(usize, usize)>,
    ) -> usize {
        let kids: Vec<usize> = t
            .children
            .iter()
            .map(|c| place(c, depth + 1, next, nodes, edges))
            .collect();
        let x2 = match (kids.first(), kids.last()) {
            (Some(&a), Some(&b)) => nodes[a].0 + nodes[b].0,
            _ => {
                *next += 1;
                2 * (*next - 1)
            }
        };
        nodes.push((x2, depth));
        let me = nodes.len() - 1;
        edges.extend(kids.iter().map(|&k| (me, k)));
        me
    }
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    place(t, 0, &mut next, &mut nodes, &mut edges);
    let width = nodes.iter().map(|n| n.0).max().unwrap_or(0);
    let depth = nodes.iter().map(|n| n.1).max().unwrap_or(0);
    let half = UNIT / 2;
    let at = |(x2, d): (i32, i32)| (PAD + x2 * half, PAD + d * UNIT);
    let mut out = String::new();
    svg_open(&mut out, width * half, depth * UNIT);
    for &(a, b) in &edges {
        let ((x1, y1), (x2, y2)) = (at(nodes[a]), at(nodes[b]));
        let _ = writeln!(
            out,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>"#
        );
    }
    for &n in &nodes {
        let (x, y) = at(n);
        let _ = writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="4" fill="black"/>"#);
    }
    out.push_str("</svg>\n");
    out
}

pub fn svg_pair(pair: &GridPathPair) -> String {
    let bp = pair.bottom.points();
    let tp = pair.top.points();
    let all: Vec<(i32, i32)> = bp.iter().chain(&tp).copied().collect();
    let top = all.iter().map(|p| p.1).max().unwrap_or(0);
    let width = all.iter().map(|p| p.0).max().unwrap_or(0);
    let mut out = String::new();
    svg_open(&mut out, width * UNIT, top * UNIT);
    svg_polyline(&mut out, &bp, top, "blue");
    svg_polyline(&mut out, &tp, top, "red");
    out.push_str("</svg>\n");
    out
}

pub fn render(obj: &Object, style: Style) -> String {
    match (obj, style) {
        (Object::Path(p), Style::Ascii) => ascii_path(p),
        (Object::Path(p), Style::Svg) => svg_path(p, &[]),
        (Object::Marked(m), Style::Ascii) => ascii_marked(m),
        (Object::Marked(m), Style::Svg) => svg_path(&m.path, &m.marks),
        (Object::Schroder(s), Style::Ascii) => ascii_schroder(s),
        (Object::Schroder(s), Style::Svg) => svg_schroder(s),
        (Object::Tree(t), Style::Ascii) => ascii_tree(t),
        (Object::Tree(t), Style::Svg) => svg_tree(t),
        (Object::Pair(p), Style::Ascii) => ascii_pair(p),
        (Object::Pair(p), Style::Svg) => svg_pair(p),
    }
}
