//! Fine-like IA Dyck paths to Fine paths, turning marks into short ascents.

use crate::error::{Error, Result};
use crate::marked::{MarkKind, MarkedPath};
use crate::path::{Path, Step};

/// Moves the upstep ending at each mark to the initial vertex of its
/// matching downstep.
pub fn finelike_to_fine(m: &MarkedPath) -> Result<Path> {
    let p = &m.path;
    p.check_dyck()?;
    if m.kind != MarkKind::Ia || !m.is_fine_like() {
        return Err(Error::Constraint(format!("{m} is not a Fine-like IA path")));
    }
    let len = p.len();
    let mut removed = vec![false; len];
    let mut inserts = vec![0usize; len + 1];
    for &v in &m.marks {
        removed[v - 1] = true;
        inserts[p.matching_downstep(v - 1)?] += 1;
    }
    let mut out = Vec::with_capacity(len);
    for w in 0..=len {
        out.extend(std::iter::repeat_n(Step::U, inserts[w]));
        if w < len && !removed[w] {
            out.push(p.step(w));
        }
    }
    Path::from_steps(&out)
}

/// Removes each short ascent and reinserts it, marked on its top vertex,
/// at the start of the associated upstep of the preceding downstep.
pub fn fine_to_finelike(q: &Path) -> Result<MarkedPath> {
    q.check_dyck()?;
    if !q.is_fine() {
        return Err(Error::Constraint(format!("{q} is not a Fine path")));
    }
    let len = q.len();
    let mut removed = vec![false; len];
    let mut inserts = vec![0usize; len + 1];
    for a in q.ascents().filter(|a| a.len == 1) {
        if a.start == 0 {
            return Err(Error::Constraint(format!("{q} starts with a short ascent")));
        }
        removed[a.start] = true;
        inserts[q.associated_upstep(a.start - 1)?] += 1;
    }
    let mut out = Vec::with_capacity(len);
    let mut marks = Vec::new();
    for w in 0..=len {
        for _ in 0..inserts[w] {
            out.push(Step::U);
            marks.push(out.len());
        }
        if w < len && !removed[w] {
            out.push(q.step(w));
        }
    }
    MarkedPath::new(Path::from_steps(&out)?, marks, MarkKind::Ia)
}
