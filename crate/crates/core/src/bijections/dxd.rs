//! The valley-to-DXD bijection, its recursive inverse, and the explicit
//! cut-and-paste form of the inverse.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::path::{Path, Step};

/// `P = U P1 D … U P(l-1) D U Pl (U Q D) D` for paths with even terminal
/// descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenDecomposition {
    pub parts: Vec<Path>,
    pub q: Path,
}

/// `P = P0 (U P1 D) … (U Pl D)` where the trailing components are exactly
/// the ones with odd terminal descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddDecomposition {
    pub p0: Path,
    pub parts: Vec<Path>,
}

/// First component `U P1 U P2 … U Pl U D^(l+1)` of a hill-free path, with
/// the rest of the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HillFreeDecomposition {
    pub parts: Vec<Path>,
    pub rest: Path,
}

/// `P = P0 UD P1 UD … UD Pl` split at the ground-level hills.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HillSplit {
    pub p0: Path,
    pub parts: Vec<Path>,
}

fn interior(c: &Path) -> Path {
    c.slice(1, c.len() - 1)
}

pub fn decompose_even(p: &Path) -> Result<EvenDecomposition> {
    p.check_dyck()?;
    let td = p.terminal_descent_len();
    if p.is_empty() || !td.is_multiple_of(2) {
        return Err(Error::Constraint(format!(
            "{p} does not have a nonempty even terminal descent"
        )));
    }
    let comps = p.components();
    let (last, init) = comps.split_last().expect("nonempty");
    let mut parts: Vec<Path> = init.iter().map(interior).collect();
    let r = interior(last);
    let rc = r.components();
    let uqd = rc
        .last()
        .expect("even terminal descent leaves a nonempty interior");
    parts.push(r.slice(0, r.len() - uqd.len()));
    Ok(EvenDecomposition {
        parts,
        q: interior(uqd),
    })
}

pub fn decompose_odd(p: &Path) -> Result<OddDecomposition> {
    p.check_dyck()?;
    if p.terminal_descent_len() % 2 != 1 {
        return Err(Error::Constraint(format!(
            "{p} does not have an odd terminal descent"
        )));
    }
    let comps = p.components();
    let keep = comps
        .iter()
        .rev()
        .take_while(|c| c.terminal_descent_len() % 2 == 1)
        .count();
    let split = comps.len() - keep;
    Ok(OddDecomposition {
        p0: Path::concat(&comps[..split]),
        parts: comps[split..].iter().map(interior).collect(),
    })
}

pub fn decompose_hill_free(p: &Path) -> Result<HillFreeDecomposition> {
    p.check_dyck()?;
    if p.is_empty() || p.has_hill() {
        return Err(Error::Constraint(format!(
            "{p} is not nonempty and hill-free"
        )));
    }
    let c = p.first_component_len();
    let first = p.slice(0, c);
    let td = first.terminal_descent_len();
    // upsteps matched by the terminal descent, outermost first
    let ups: Vec<usize> = (0..td)
        .map(|i| first.matching_upstep(c - 1 - i))
        .collect::<Result<_>>()?;
    let parts = ups
        .windows(2)
        .map(|w| first.slice(w[0] + 1, w[1]))
        .collect();
    Ok(HillFreeDecomposition {
        parts,
        rest: p.slice(c, p.len()),
    })
}

pub fn split_at_hills(p: &Path) -> Result<HillSplit> {
    p.check_dyck()?;
    let mut pieces = Vec::new();
    let mut cur = Vec::new();
    for c in p.components() {
        if c.len() == 2 {
            pieces.push(Path::concat(&cur));
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    pieces.push(Path::concat(&cur));
    let p0 = pieces.remove(0);
    Ok(HillSplit { p0, parts: pieces })
}

fn up() -> Path {
    Path::parse("U").expect("literal")
}

fn down() -> Path {
    Path::parse("D").expect("literal")
}

fn hill() -> Path {
    Path::parse("UD").expect("literal")
}

/// Sends valleys to DXDs, even terminal descent to hill-free paths.
pub fn du_to_dxd(p: &Path) -> Result<Path> {
    p.check_dyck()?;
    Ok(phi(p))
}

fn phi(p: &Path) -> Path {
    if p.is_empty() {
        return Path::empty();
    }
    if p.terminal_descent_len().is_multiple_of(2) {
        let dec = decompose_even(p).expect("checked parity");
        let l = dec.parts.len();
        let mut out = Vec::with_capacity(2 * l + 3);
        for part in &dec.parts {
            out.push(up());
            out.push(phi(part));
        }
        out.push(up());
        out.extend(std::iter::repeat_n(down(), l + 1));
        out.push(phi(&dec.q));
        Path::concat(&out)
    } else {
        let dec = decompose_odd(p).expect("checked parity");
        let mut out = vec![phi(&dec.p0)];
        for part in &dec.parts {
            out.push(hill());
            out.push(phi(part));
        }
        Path::concat(&out)
    }
}

/// Recursive inverse of [`du_to_dxd`].
pub fn dxd_to_du(p: &Path) -> Result<Path> {
    p.check_dyck()?;
    Ok(psi(p))
}

fn psi(p: &Path) -> Path {
    if p.is_empty() {
        return Path::empty();
    }
    if p.has_hill() {
        let split = split_at_hills(p).expect("dyck");
        let mut out = vec![psi(&split.p0)];
        for part in &split.parts {
            out.push(psi(part).elevate());
        }
        Path::concat(&out)
    } else {
        let dec = decompose_hill_free(p).expect("hill-free");
        let l = dec.parts.len();
        let mut out = Vec::with_capacity(l + 1);
        for part in &dec.parts[..l - 1] {
            out.push(psi(part).elevate());
        }
        let inner = Path::concat(&[psi(&dec.parts[l - 1]), psi(&dec.rest).elevate()]);
        out.push(inner.elevate());
        Path::concat(&out)
    }
}

/// Intermediate stages of the cut-and-paste map. Positions refer to the
/// input path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitTrace {
    pub input: Path,
    pub reds: Vec<usize>,
    pub blues: Vec<usize>,
    pub after_blue: Path,
    pub output: Path,
}

impl ExplicitTrace {
    /// Input with red steps as `r` and blue steps as `b`.
    pub fn colored(&self) -> String {
        self.input
            .steps()
            .enumerate()
            .map(|(i, s)| {
                if self.reds.contains(&i) {
                    'r'
                } else if self.blues.contains(&i) {
                    'b'
                } else {
                    s.as_char()
                }
            })
            .collect()
    }

    pub fn lines(&self) -> Vec<String> {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        vec![
            format!("input   {}", self.input),
            format!("colored {}", self.colored()),
            format!("reds    {}", list(&self.reds)),
            format!("blues   {}", list(&self.blues)),
            format!("blue    {}", self.after_blue),
            format!("output  {}", self.output),
        ]
    }
}

/// Last `D` of every `DDD`, overlapping runs included.
pub fn red_steps(p: &Path) -> Vec<usize> {
    (2..p.len())
        .filter(|&i| !p.is_up(i - 2) && !p.is_up(i - 1) && !p.is_up(i))
        .collect()
}

/// Middle `U` of every `DUU` whose matching downstep is not immediately
/// followed by a red step.
pub fn blue_steps(p: &Path) -> Result<Vec<usize>> {
    let reds = red_steps(p);
    let mut out = Vec::new();
    for i in 1..p.len().saturating_sub(1) {
        if p.is_up(i) && !p.is_up(i - 1) && p.is_up(i + 1) {
            let m = p.matching_downstep(i)?;
            if !reds.contains(&(m + 1)) {
                out.push(i);
            }
        }
    }
    Ok(out)
}

pub fn dxd_to_du_explicit(p: &Path) -> Result<Path> {
    Ok(dxd_to_du_traced(p, None)?.output)
}

/// Runs the cut-and-paste map. `blue_order` permutes the blue steps
/// (given as input positions); left to right when `None`.
pub fn dxd_to_du_traced(p: &Path, blue_order: Option<&[usize]>) -> Result<ExplicitTrace> {
    p.check_dyck()?;
    let reds = red_steps(p);
    let blues = blue_steps(p)?;
    let order: Vec<usize> = match blue_order {
        Some(o) => {
            let mut a = o.to_vec();
            let mut b = blues.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::Constraint(format!(
                    "blue order {o:?} is not a permutation of {blues:?}"
                )));
            }
            o.to_vec()
        }
        None => blues.clone(),
    };

    // step ids are input positions
    let mut seq: Vec<(usize, Step)> = p.steps().enumerate().collect();
    for id in order {
        let start = seq.iter().position(|&(j, _)| j == id).expect("id present");
        let mut h = 0;
        let mut end = start;
        for (k, &(_, s)) in seq.iter().enumerate().skip(start) {
            h += s.delta();
            if h == 0 {
                end = k;
                break;
            }
        }
        let peak = (1..start)
            .rev()
            .find(|&v| seq[v - 1].1 == Step::U && seq[v].1 == Step::D)
            .ok_or_else(|| Error::Constraint(format!("no peak before blue step {id}")))?;
        let block: Vec<(usize, Step)> = seq.drain(start..=end).collect();
        seq.splice(peak..peak, block);
    }
    let after_blue = to_path(&seq)?;

    let mut targets: HashMap<usize, Vec<usize>> = HashMap::new();
    for &r in &reds {
        let pos = seq.iter().position(|&(j, _)| j == r).expect("id present");
        let cur = to_path(&seq)?;
        let t = cur.matching_upstep(pos - 1)?;
        targets.entry(seq[t].0).or_default().push(r);
    }
    let mut out = Vec::with_capacity(seq.len());
    for &(id, s) in &seq {
        if reds.contains(&id) {
            continue;
        }
        if let Some(rs) = targets.get(&id) {
            out.extend(rs.iter().map(|_| Step::D));
        }
        out.push(s);
    }
    let output = Path::from_steps(&out)?;
    output
        .check_dyck()
        .map_err(|_| Error::Constraint(format!("cut-and-paste left the Dyck class: {output}")))?;
    Ok(ExplicitTrace {
        input: *p,
        reds,
        blues,
        after_blue,
        output,
    })
}

fn to_path(seq: &[(usize, Step)]) -> Result<Path> {
    let steps: Vec<Step> = seq.iter().map(|&(_, s)| s).collect();
    Path::from_steps(&steps)
}
