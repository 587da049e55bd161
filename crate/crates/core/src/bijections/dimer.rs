//! A bijection on Dyck paths sending the number of dimers the upsteps
//! accommodate to the number of hill-producing upsteps.
//!
//! Nonstrict paths are mapped component by component. A strict path with
//! first ascent length at least 2 falls into one of six cases, keyed on the
//! parity of its first ascent and on whether `I(P)`, `I²(P)` contain hills,
//! where `I` takes the interior of the first component.

use crate::error::{Error, Result};
use crate::path::Path;

use super::dxd::split_at_hills;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimerCase {
    /// Even first ascent, `I(P)` Fine.
    One,
    /// Even first ascent, `I(P)` Hill, `I²(P)` empty.
    Two,
    /// Even first ascent, `I(P)` Hill, `I²(P)` nonempty Fine.
    Three,
    /// Even first ascent, `I(P)` and `I²(P)` Hill.
    Four,
    /// Odd first ascent, `I(P)` Fine.
    Five,
    /// Odd first ascent, `I(P)` Hill.
    Six,
}

fn interior(p: &Path) -> Path {
    p.interior_of_first_component().unwrap_or_default()
}

fn is_hill(p: &Path) -> bool {
    p.has_hill()
}

fn lit(s: &str) -> Path {
    Path::parse(s).expect("literal")
}

fn is_unit(p: &Path) -> bool {
    p.len() == 2
}

/// Case of a strict path with first ascent length at least 2.
pub fn classify(p: &Path) -> Option<DimerCase> {
    if !p.is_dyck() || !p.is_strict() || is_unit(p) {
        return None;
    }
    let i = interior(p);
    Some(if p.first_ascent_len().is_multiple_of(2) {
        if !is_hill(&i) {
            DimerCase::One
        } else {
            let i2 = interior(&i);
            if i2.is_empty() {
                DimerCase::Two
            } else if !is_hill(&i2) {
                DimerCase::Three
            } else {
                DimerCase::Four
            }
        }
    } else if !is_hill(&i) {
        DimerCase::Five
    } else {
        DimerCase::Six
    })
}

/// Case a strict image path came from, read off `I(Q)`, `I²(Q)`, `I³(Q)`.
pub fn classify_image(q: &Path) -> Option<DimerCase> {
    if !q.is_dyck() || !q.is_strict() || is_unit(q) {
        return None;
    }
    let i = interior(q);
    let i2 = interior(&i);
    Some(if is_hill(&i) {
        if i2.is_empty() {
            DimerCase::Two
        } else if is_hill(&i2) {
            DimerCase::One
        } else if is_hill(&interior(&i2)) {
            DimerCase::Three
        } else {
            DimerCase::Four
        }
    } else if is_hill(&i2) {
        DimerCase::Five
    } else {
        DimerCase::Six
    })
}

/// `U P1 D P2` with `U P1 D` the first component.
fn split_first(p: &Path) -> (Path, Path) {
    let c = p.first_component_len();
    (p.slice(1, c - 1), p.slice(c, p.len()))
}

pub fn dimer_to_hill(p: &Path) -> Result<Path> {
    p.check_dyck()?;
    Ok(phi(p))
}

fn phi(p: &Path) -> Path {
    if p.is_empty() || is_unit(p) {
        return *p;
    }
    let comps = p.components();
    if comps.len() > 1 {
        return Path::concat(&comps.iter().map(phi).collect::<Vec<_>>());
    }
    let i = interior(p);
    match classify(p).expect("strict with first ascent at least 2") {
        DimerCase::One => {
            let (p1, p2) = split_first(&i);
            Path::concat(&[lit("U"), phi(&p1), lit("UD"), phi(&p2), lit("D")])
        }
        DimerCase::Two => {
            let p2 = i.slice(2, i.len());
            Path::concat(&[lit("UUD"), phi(&p2), lit("D")])
        }
        DimerCase::Three => {
            let (p1, p2) = split_first(&i);
            Path::concat(&[lit("UU"), phi(&p1), lit("D"), phi(&p2), lit("D")])
        }
        DimerCase::Four | DimerCase::Five => phi(&i).elevate(),
        DimerCase::Six => {
            let split = split_at_hills(&i).expect("dyck");
            let l = split.parts.len();
            let mut out = vec![
                Path::from_bits((1u64 << (l + 1)) - 1, l + 1),
                phi(&split.p0),
            ];
            for part in &split.parts {
                out.push(lit("D"));
                out.push(phi(part));
            }
            out.push(lit("D"));
            Path::concat(&out)
        }
    }
}

pub fn hill_to_dimer(q: &Path) -> Result<Path> {
    q.check_dyck()?;
    psi(q)
}

fn psi(q: &Path) -> Result<Path> {
    if q.is_empty() || is_unit(q) {
        return Ok(*q);
    }
    let comps = q.components();
    if comps.len() > 1 {
        let parts = comps.iter().map(psi).collect::<Result<Vec<_>>>()?;
        return Ok(Path::concat(&parts));
    }
    let i = interior(q);
    let case = classify_image(q).expect("strict with first ascent at least 2");
    Ok(match case {
        DimerCase::Two => {
            let q2 = i.slice(2, i.len());
            Path::concat(&[lit("UUD"), psi(&q2)?, lit("D")])
        }
        DimerCase::One => {
            let ic = i.components();
            let last = ic.iter().rposition(is_unit).expect("interior has a hill");
            let before = Path::concat(&ic[..last]);
            let after = Path::concat(&ic[last + 1..]);
            Path::concat(&[lit("UU"), psi(&before)?, lit("D"), psi(&after)?, lit("D")])
        }
        DimerCase::Three => {
            let (x, y) = split_first(&i);
            Path::concat(&[lit("UU"), psi(&x)?, lit("D"), psi(&y)?, lit("D")])
        }
        DimerCase::Four | DimerCase::Five => psi(&i)?.elevate(),
        DimerCase::Six => {
            let mut rest = Vec::new();
            let mut y = i;
            let p0 = loop {
                let c = y.first_component_len();
                rest.push(y.slice(c, y.len()));
                let z = y.slice(1, c - 1);
                if z.is_empty() {
                    return Err(Error::Constraint(format!("{q} has no case-six preimage")));
                }
                if is_hill(&interior(&z)) {
                    break psi(&z)?;
                }
                y = z;
            };
            let mut out = vec![lit("U"), p0];
            for r in rest.iter().rev() {
                out.push(lit("UD"));
                out.push(psi(r)?);
            }
            out.push(lit("D"));
            Path::concat(&out)
        }
    })
}
