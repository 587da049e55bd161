//! Parity-constrained DF-marked balanced paths to plain balanced paths,
//! sending marks to odd-length ascents.

use crate::error::{Error, Result};
use crate::marked::{MarkKind, MarkedPath};
use crate::path::{Path, Step};

/// Erases ground-level marks and moves the upstep at every other mark to
/// its matching vertex: east above ground, west below it.
pub fn marks_to_odd_ascents(m: &MarkedPath) -> Result<Path> {
    if m.kind != MarkKind::Df {
        return Err(Error::InvalidMarks("expected DF marks".into()));
    }
    if !m.satisfies_parity() {
        return Err(Error::Constraint(format!(
            "{m}: some ascent has odd length minus marks"
        )));
    }
    let p = &m.path;
    let len = p.len();
    let mut removed = vec![false; len];
    let mut inserts = vec![0usize; len + 1];
    for &v in &m.marks {
        let h = p.height(v);
        if h == 0 {
            continue;
        }
        let w = if h > 0 {
            (v + 1..=len).find(|&w| p.height(w) == h)
        } else {
            (0..v).rev().find(|&w| p.height(w) == h)
        }
        .ok_or(Error::NoMatchingVertex { vertex: v })?;
        removed[v] = true;
        inserts[w] += 1;
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

fn heights(seq: &[(usize, Step)]) -> Vec<i32> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    let mut h = 0;
    out.push(h);
    for &(_, s) in seq {
        h += s.delta();
        out.push(h);
    }
    out
}

/// Recovers the marks from the odd-length ascents. Transferred steps are
/// moved back one at a time, innermost first, so nested transfers see the
/// heights they were made against.
pub fn odd_ascents_to_marks(q: &Path) -> Result<MarkedPath> {
    q.check_balanced()?;
    let len = q.len();
    // from above ground: the ascent's initial step; from below: its last
    let mut west = Vec::new();
    let mut east = Vec::new();
    let mut ground_steps = Vec::new();
    let (mut at_start, mut at_end) = (false, false);
    for a in q.ascents().filter(|a| a.len % 2 == 1) {
        let (s, e) = (a.start, a.end());
        let (hs, he) = (q.height(s), q.height(e));
        if s == 0 {
            at_start = true;
        } else if e == len {
            at_end = true;
        } else if hs < 0 && he > 0 {
            ground_steps.push(s + hs.unsigned_abs() as usize);
        } else if hs >= 0 {
            west.push(s);
        } else {
            east.push(e - 1);
        }
    }

    let mut seq: Vec<(usize, Step)> = q.steps().enumerate().collect();
    let find = |seq: &[(usize, Step)], id: usize| {
        seq.iter().position(|&(j, _)| j == id).expect("id present")
    };
    for &id in &west {
        let s = find(&seq, id);
        let h = heights(&seq);
        let top = h[s] + 1;
        let mut t = s - 1;
        while t > 0 && h[t - 1] >= top {
            t -= 1;
        }
        if h[t] != top {
            return Err(Error::Constraint(format!(
                "no reinsertion vertex for step {id} of {q}"
            )));
        }
        let step = seq.remove(s);
        seq.insert(t, step);
    }
    for &id in east.iter().rev() {
        let u = find(&seq, id);
        let h = heights(&seq);
        let e = u + 1;
        let bottom = h[e] - 1;
        let mut t = e + 1;
        while t < seq.len() && h[t + 1] <= bottom {
            t += 1;
        }
        if t > seq.len() || h[t] != bottom {
            return Err(Error::Constraint(format!(
                "no reinsertion vertex for step {id} of {q}"
            )));
        }
        let step = seq.remove(u);
        seq.insert(t - 1, step);
    }

    let mut marks: Vec<usize> = Vec::new();
    if at_start {
        marks.push(0);
    }
    if at_end {
        marks.push(len);
    }
    marks.extend(west.iter().map(|&id| find(&seq, id)));
    marks.extend(east.iter().map(|&id| find(&seq, id) + 1));
    marks.extend(ground_steps.iter().map(|&id| find(&seq, id)));
    marks.sort_unstable();
    let steps: Vec<Step> = seq.iter().map(|&(_, s)| s).collect();
    MarkedPath::new(Path::from_steps(&steps)?, marks, MarkKind::Df)
}
