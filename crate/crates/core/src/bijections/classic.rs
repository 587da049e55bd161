//! Reversal, the Deutsch involution and the Levine correspondence.

use crate::error::{Error, Result};
use crate::grid::{GridPath, GridPathPair, PairRole};
use crate::path::Path;

/// Reads the path backwards with `U` and `D` exchanged.
pub fn reverse_path(p: &Path) -> Path {
    p.reverse_complement()
}

/// `U P1 D P2 ↦ U φ(P2) D φ(P1)`.
pub fn deutsch_involution(p: &Path) -> Result<Path> {
    p.check_dyck()?;
    Ok(deutsch(p))
}

fn deutsch(p: &Path) -> Path {
    if p.is_empty() {
        return Path::empty();
    }
    let l = p.first_component_len();
    let p1 = p.slice(1, l - 1);
    let p2 = p.slice(l, p.len());
    Path::concat(&[deutsch(&p2).elevate(), deutsch(&p1)])
}

/// Ascent lengths `1 + a_i` from the top path's north runs, descent
/// lengths `1 + d_i` from the bottom path's.
pub fn levine_to_dyck(pair: &GridPathPair) -> Result<Path> {
    pair.levine_params()?;
    let a = pair.top.north_runs();
    let d = pair.bottom.north_runs();
    let mut text = String::new();
    for (ai, di) in a.iter().zip(&d) {
        text.extend(std::iter::repeat_n('U', 1 + ai));
        text.extend(std::iter::repeat_n('D', 1 + di));
    }
    Path::parse_dyck(&text)
}

pub fn dyck_to_levine(p: &Path) -> Result<GridPathPair> {
    p.check_dyck()?;
    if p.is_empty() {
        return Err(Error::EmptyPath);
    }
    let a: Vec<usize> = p.ascent_lengths().iter().map(|l| l - 1).collect();
    let d: Vec<usize> = p.descent_lengths().iter().map(|l| l - 1).collect();
    let pair = GridPathPair {
        bottom: GridPath::from_north_runs((1, 0), &d),
        top: GridPath::from_north_runs((0, 1), &a),
        role: PairRole::Levine,
    };
    pair.levine_params()?;
    Ok(pair)
}
