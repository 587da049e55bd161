//! Paths carrying marks on IA or DF vertices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkKind {
    /// Vertices in the interior of an ascent.
    Ia,
    /// Vertices incident to no downstep.
    Df,
}

/// Vertex `v` sits between two upsteps.
pub fn is_ia_vertex(p: &Path, v: usize) -> bool {
    v >= 1 && v < p.len() && p.is_up(v - 1) && p.is_up(v)
}

/// Vertex `v` touches no downstep. The lone vertex of the empty path
/// touches no step at all and is not counted.
pub fn is_df_vertex(p: &Path, v: usize) -> bool {
    if v > p.len() || p.is_empty() {
        return false;
    }
    let before_ok = v == 0 || p.is_up(v - 1);
    let after_ok = v == p.len() || p.is_up(v);
    before_ok && after_ok
}

pub fn markable_vertices(p: &Path, kind: MarkKind) -> Vec<usize> {
    (0..=p.len())
        .filter(|&v| match kind {
            MarkKind::Ia => is_ia_vertex(p, v),
            MarkKind::Df => is_df_vertex(p, v),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPath {
    pub path: Path,
    pub marks: Vec<usize>,
    pub kind: MarkKind,
}

impl MarkedPath {
    /// Validates that marks are strictly increasing and admissible for `kind`.
    pub fn new(path: Path, marks: Vec<usize>, kind: MarkKind) -> Result<MarkedPath> {
        path.check_balanced()?;
        if marks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMarks(format!(
                "marks must be strictly increasing: {marks:?}"
            )));
        }
        for &v in &marks {
            let ok = match kind {
                MarkKind::Ia => is_ia_vertex(&path, v),
                MarkKind::Df => is_df_vertex(&path, v),
            };
            if !ok {
                return Err(Error::InvalidMarks(format!(
                    "vertex {v} is not a {} vertex of {path}",
                    match kind {
                        MarkKind::Ia => "IA",
                        MarkKind::Df => "DF",
                    }
                )));
            }
        }
        Ok(MarkedPath { path, marks, kind })
    }

    pub fn unmarked(path: Path, kind: MarkKind) -> MarkedPath {
        MarkedPath {
            path,
            marks: Vec::new(),
            kind,
        }
    }

    pub fn is_marked(&self, v: usize) -> bool {
        self.marks.binary_search(&v).is_ok()
    }

    /// Every ascent has length minus marks-on-it even. Each DF vertex lies
    /// on exactly one ascent (its interior, or an endpoint at the ends of
    /// the path).
    pub fn satisfies_parity(&self) -> bool {
        let p = &self.path;
        p.ascents().all(|a| {
            let on = self
                .marks
                .iter()
                .filter(|&&v| v >= a.start && v <= a.end())
                .count();
            (a.len - on) % 2 == 0
        })
    }

    /// No short ascents, and the first interior vertex of every ascent is
    /// unmarked.
    pub fn is_fine_like(&self) -> bool {
        self.path
            .ascents()
            .all(|a| a.len >= 2 && !self.is_marked(a.start + 1))
    }
}

impl fmt::Display for MarkedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.path)?;
        if self.marks.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma-separated mark list; `-` or the empty string mean none.
pub fn parse_marks(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "-" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidMarks(format!("bad vertex index {x:?}")))
        })
        .collect()
}

/// `"<path> <marks>"` with the kind supplied separately; see
/// [`MarkedPath::from_text`].
impl FromStr for MarkedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<MarkedPath> {
        MarkedPath::from_text(s, MarkKind::Df)
    }
}

impl MarkedPath {
    pub fn from_text(s: &str, kind: MarkKind) -> Result<MarkedPath> {
        let mut it = s.split_whitespace();
        let path = Path::parse(it.next().unwrap_or(""))?;
        let marks = parse_marks(it.next().unwrap_or(""))?;
        MarkedPath::new(path, marks, kind)
    }
}
