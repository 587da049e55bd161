//! Per-path statistics.
//!
//! Pattern counts record every occurrence position, so overlapping
//! occurrences each count (`DDDD` has two `DDD`s and therefore two `DXD`s).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{Path, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKind {
    UU,
    UD,
    DU,
    DD,
    Peaks,
    Valleys,
    Hills,
    Dxd,
    LongInteriorInclines,
    LongNonterminalInclines,
    LongNoninitialAscents,
    LongAscents,
    ShortAscents,
    OddAscents,
    TerminalDescentLen,
    FirstAscentLen,
    Returns,
    XUpstepsAboveGround,
    MaxDimers,
    HillProducingUpsteps,
    StrictIndicator,
    X1PlusX2,
}

impl StatKind {
    pub const ALL: [StatKind; 22] = [
        StatKind::UU,
        StatKind::UD,
        StatKind::DU,
        StatKind::DD,
        StatKind::Peaks,
        StatKind::Valleys,
        StatKind::Hills,
        StatKind::Dxd,
        StatKind::LongInteriorInclines,
        StatKind::LongNonterminalInclines,
        StatKind::LongNoninitialAscents,
        StatKind::LongAscents,
        StatKind::ShortAscents,
        StatKind::OddAscents,
        StatKind::TerminalDescentLen,
        StatKind::FirstAscentLen,
        StatKind::Returns,
        StatKind::XUpstepsAboveGround,
        StatKind::MaxDimers,
        StatKind::HillProducingUpsteps,
        StatKind::StrictIndicator,
        StatKind::X1PlusX2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::UU => "uu",
            StatKind::UD => "ud",
            StatKind::DU => "du",
            StatKind::DD => "dd",
            StatKind::Peaks => "peaks",
            StatKind::Valleys => "valleys",
            StatKind::Hills => "hills",
            StatKind::Dxd => "dxd",
            StatKind::LongInteriorInclines => "long_interior_inclines",
            StatKind::LongNonterminalInclines => "long_nonterminal_inclines",
            StatKind::LongNoninitialAscents => "long_noninitial_ascents",
            StatKind::LongAscents => "long_ascents",
            StatKind::ShortAscents => "short_ascents",
            StatKind::OddAscents => "odd_ascents",
            StatKind::TerminalDescentLen => "terminal_descent_len",
            StatKind::FirstAscentLen => "first_ascent_len",
            StatKind::Returns => "returns",
            StatKind::XUpstepsAboveGround => "x_upsteps_above_ground",
            StatKind::MaxDimers => "max_dimers",
            StatKind::HillProducingUpsteps => "hill_producing_upsteps",
            StatKind::StrictIndicator => "strict_indicator",
            StatKind::X1PlusX2 => "x1_plus_x2",
        }
    }

    /// Statistics that only make sense on Dyck paths.
    pub fn requires_dyck(self) -> bool {
        matches!(
            self,
            StatKind::HillProducingUpsteps | StatKind::StrictIndicator | StatKind::X1PlusX2
        )
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<StatKind> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        StatKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Evaluates `kind` on `p`, checking that `p` lies in the class the
/// statistic is defined on.
pub fn statistic(p: &Path, kind: StatKind) -> Result<u64> {
    if !p.is_balanced() {
        return Err(Error::StatUndefined {
            stat: kind,
            class: "unbalanced",
        });
    }
    if kind.requires_dyck() && !p.is_dyck() {
        return Err(Error::StatUndefined {
            stat: kind,
            class: p.class().name(),
        });
    }
    Ok(statistic_unchecked(p, kind))
}

/// Evaluates `kind` without class checks; callers guarantee the class.
pub fn statistic_unchecked(p: &Path, kind: StatKind) -> u64 {
    use StatKind::*;
    let v = match kind {
        UU => count_pair(p, Step::U, Step::U),
        UD | Peaks => count_pair(p, Step::U, Step::D),
        DU | Valleys => count_pair(p, Step::D, Step::U),
        DD => count_pair(p, Step::D, Step::D),
        Hills => hills(p),
        Dxd => dxd(p),
        LongInteriorInclines => p
            .inclines()
            .iter()
            .filter(|c| c.is_long() && c.is_interior())
            .count(),
        LongNonterminalInclines => p
            .inclines()
            .iter()
            .filter(|c| c.is_long() && !c.is_terminal)
            .count(),
        LongNoninitialAscents => p.ascents().filter(|c| c.is_long() && !c.is_initial).count(),
        LongAscents => p.ascents().filter(|c| c.is_long()).count(),
        ShortAscents => p.ascents().filter(|c| !c.is_long()).count(),
        OddAscents => odd_ascents(p),
        TerminalDescentLen => p.terminal_descent_len(),
        FirstAscentLen => p.first_ascent_len(),
        Returns => p.returns(),
        XUpstepsAboveGround => x_statistic(p),
        MaxDimers => (p.size() - odd_ascents(p)) / 2,
        HillProducingUpsteps => hill_producing_upsteps(p),
        StrictIndicator => usize::from(p.is_strict()),
        X1PlusX2 => {
            statistic_unchecked(p, LongInteriorInclines) as usize + usize::from(p.is_strict())
        }
    };
    v as u64
}

fn count_pair(p: &Path, a: Step, b: Step) -> usize {
    (0..p.len().saturating_sub(1))
        .filter(|&i| p.step(i) == a && p.step(i + 1) == b)
        .count()
}

fn hills(p: &Path) -> usize {
    (0..p.len().saturating_sub(1))
        .filter(|&i| p.is_up(i) && !p.is_up(i + 1) && p.height(i) == 0)
        .count()
}

fn dxd(p: &Path) -> usize {
    (0..p.len().saturating_sub(2))
        .filter(|&i| !p.is_up(i) && !p.is_up(i + 2))
        .count()
}

fn odd_ascents(p: &Path) -> usize {
    p.ascents().filter(|c| c.len % 2 == 1).count()
}

/// Upsteps leaving a vertex at height zero or more.
pub fn x_statistic(p: &Path) -> usize {
    let mut h = 0;
    let mut x = 0;
    for s in p.steps() {
        if s == Step::U && h >= 0 {
            x += 1;
        }
        h += s.delta();
    }
    x
}

/// Whether the strictly-between subpath of upstep `u` and its matching
/// downstep contains a hill relative to its own ground.
pub fn is_hill_producing(p: &Path, u: usize) -> bool {
    let Ok(j) = p.matching_downstep(u) else {
        return false;
    };
    let ground = p.height(u) + 1;
    (u + 1..j.saturating_sub(1)).any(|k| p.is_up(k) && !p.is_up(k + 1) && p.height(k) == ground)
}

fn hill_producing_upsteps(p: &Path) -> usize {
    (0..p.len())
        .filter(|&u| p.is_up(u) && is_hill_producing(p, u))
        .count()
}
