//! DF-marked Dyck paths and Schröder paths.

use crate::error::{Error, Result};
use crate::marked::{MarkKind, MarkedPath};
use crate::path::{Path, Step};
use crate::schroder::{SchroderPath, SchroderStep};

/// Deletes each upstep that starts at a mark and flattens its matching
/// downstep into a double flat.
pub fn df_to_schroder(m: &MarkedPath) -> Result<SchroderPath> {
    if m.kind != MarkKind::Df {
        return Err(Error::InvalidMarks("expected DF marks".into()));
    }
    let p = &m.path;
    p.check_dyck()?;
    let mut flat = vec![false; p.len()];
    for &v in &m.marks {
        flat[p.matching_downstep(v)?] = true;
    }
    let steps = p
        .steps()
        .enumerate()
        .filter(|(i, _)| !m.is_marked(*i))
        .map(|(i, s)| match s {
            Step::U => SchroderStep::U,
            Step::D if flat[i] => SchroderStep::F,
            Step::D => SchroderStep::D,
        })
        .collect();
    SchroderPath::new(steps)
}

pub fn schroder_to_df(s: &SchroderPath) -> Result<MarkedPath> {
    let steps = s.steps();
    let h = s.heights();
    let mut count = vec![0usize; steps.len() + 1];
    for (f, st) in steps.iter().enumerate() {
        if *st != SchroderStep::F {
            continue;
        }
        let hf = h[f];
        let mut w = f;
        while w > 0 && !(steps[w - 1] == SchroderStep::U && h[w - 1] == hf - 1) {
            w -= 1;
        }
        count[w] += 1;
    }
    let mut out = Vec::new();
    let mut marks = Vec::new();
    for (w, st) in steps.iter().enumerate() {
        for _ in 0..count[w] {
            marks.push(out.len());
            out.push(Step::U);
        }
        out.push(match st {
            SchroderStep::U => Step::U,
            _ => Step::D,
        });
    }
    let path = Path::from_steps(&out)?;
    MarkedPath::new(path, marks, MarkKind::Df)
}
