//! Raw nonintersecting pairs to Levine pairs, and the chains from Levine
//! pairs to Dyck paths counted by long interior inclines.

use crate::enumerate::GvVariant;
use crate::error::{Error, Result};
use crate::grid::{GridPath, GridPathPair, GridStep, PairRole};
use crate::path::Path;

use super::classic::{deutsch_involution, dyck_to_levine, levine_to_dyck, reverse_path};
use super::dxd::{du_to_dxd, dxd_to_du};

/// `A`: the adjusted top path ends `E`. `B`: it ends `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GvClass {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Adjusted {
    pub class: GvClass,
    pub pair: GridPathPair,
}

fn check_anchors(pair: &GridPathPair, variant: GvVariant) -> Result<()> {
    let (bs, ts) = match variant {
        GvVariant::LongInterior => ((1, 0), (0, 1)),
        GvVariant::InteriorStrict => ((2, 0), (0, 0)),
    };
    if pair.bottom.start != bs || pair.top.start != ts {
        return Err(Error::MalformedPair(format!(
            "expected starts {bs:?} and {ts:?}, got {:?} and {:?}",
            pair.bottom.start, pair.top.start
        )));
    }
    pair.check_nonintersecting()
}

/// Moves the bottom path's last step, flipped, onto the end of the top
/// path. The `InteriorStrict` variant also moves the top path's first step,
/// flipped, onto the front of the bottom path and re-anchors the result.
pub fn gv_adjust(pair: &GridPathPair, variant: GvVariant) -> Result<Adjusted> {
    check_anchors(pair, variant)?;
    if variant == GvVariant::InteriorStrict
        && pair.bottom.steps.is_empty()
        && pair.top.steps.is_empty()
    {
        // size one: nothing to move, the unit Levine pair
        return Ok(Adjusted {
            class: GvClass::B,
            pair: unit_pair(),
        });
    }
    let mut b = pair.bottom.steps.clone();
    let mut t = pair.top.steps.clone();
    let last = b
        .pop()
        .ok_or_else(|| Error::MalformedPair("bottom path is empty".into()))?;
    t.push(last.flip());
    let (mut bs, mut ts) = (pair.bottom.start, pair.top.start);
    if variant == GvVariant::InteriorStrict {
        if t.len() < 2 {
            return Err(Error::MalformedPair("top path is empty".into()));
        }
        let first = t.remove(0);
        let (fx, fy) = first.vector();
        ts = (ts.0 + fx, ts.1 + fy);
        let moved = first.flip();
        let (mx, my) = moved.vector();
        bs = (bs.0 - mx, bs.1 - my);
        b.insert(0, moved);
        let (dx, dy) = (-ts.0, 1 - ts.1);
        bs = (bs.0 + dx, bs.1 + dy);
        ts = (0, 1);
    }
    let out = GridPathPair {
        bottom: GridPath::new(bs, b),
        top: GridPath::new(ts, t),
        role: PairRole::Levine,
    };
    out.levine_params()?;
    let class = match out.top.steps.last() {
        Some(GridStep::E) => GvClass::A,
        _ => GvClass::B,
    };
    Ok(Adjusted { class, pair: out })
}

pub fn gv_unadjust(adj: &Adjusted, variant: GvVariant) -> Result<GridPathPair> {
    adj.pair.levine_params()?;
    if variant == GvVariant::InteriorStrict && adj.pair == unit_pair() {
        return Ok(GridPathPair {
            bottom: GridPath::new((2, 0), Vec::new()),
            top: GridPath::new((0, 0), Vec::new()),
            role: PairRole::RawGv,
        });
    }
    let mut b = adj.pair.bottom.steps.clone();
    let mut t = adj.pair.top.steps.clone();
    let want = match adj.class {
        GvClass::A => GridStep::E,
        GvClass::B => GridStep::N,
    };
    let last = t
        .pop()
        .filter(|s| *s == want)
        .ok_or_else(|| Error::MalformedPair(format!("top path does not end {}", want.as_char())))?;
    b.push(last.flip());
    let (mut bs, mut ts) = ((1, 0), (0, 1));
    if variant == GvVariant::InteriorStrict {
        if b.is_empty() {
            return Err(Error::MalformedPair("bottom path is empty".into()));
        }
        let moved = b.remove(0);
        if moved == GridStep::N {
            bs = (bs.0 + 1, bs.1 - 1);
            ts = (ts.0 + 1, ts.1 - 1);
        }
        let (mx, my) = moved.vector();
        bs = (bs.0 + mx, bs.1 + my);
        let first = moved.flip();
        let (fx, fy) = first.vector();
        ts = (ts.0 - fx, ts.1 - fy);
        t.insert(0, first);
    }
    let raw = GridPathPair {
        bottom: GridPath::new(bs, b),
        top: GridPath::new(ts, t),
        role: PairRole::RawGv,
    };
    check_anchors(&raw, variant)?;
    Ok(raw)
}

fn unit_pair() -> GridPathPair {
    GridPathPair {
        bottom: GridPath::new((1, 0), Vec::new()),
        top: GridPath::new((0, 1), Vec::new()),
        role: PairRole::Levine,
    }
}

fn chain(pair: &GridPathPair) -> Result<Path> {
    let p = levine_to_dyck(pair)?;
    du_to_dxd(&deutsch_involution(&reverse_path(&p))?)
}

/// Class-A Levine pair to a Dyck path ending `DD`.
pub fn chain_a(pair: &GridPathPair) -> Result<Path> {
    if pair.top.steps.last() != Some(&GridStep::E) {
        return Err(Error::Constraint(
            "chain_a needs a top path ending E".into(),
        ));
    }
    chain(pair)
}

/// Class-B Levine pair to a Dyck path ending `UD`.
pub fn chain_b(pair: &GridPathPair) -> Result<Path> {
    if pair.top.steps.last() != Some(&GridStep::N) {
        return Err(Error::Constraint(
            "chain_b needs a top path ending N".into(),
        ));
    }
    chain(pair)
}

/// Inverse of both chains; the class is read off the recovered top path.
pub fn chain_inverse(p: &Path) -> Result<Adjusted> {
    let q = reverse_path(&deutsch_involution(&dxd_to_du(p)?)?);
    let pair = dyck_to_levine(&q)?;
    let class = match pair.top.steps.last() {
        Some(GridStep::E) => GvClass::A,
        Some(GridStep::N) => GvClass::B,
        None => {
            return Err(Error::Constraint(format!(
                "{p} has no class-A or class-B preimage"
            )))
        }
    };
    Ok(Adjusted { class, pair })
}
