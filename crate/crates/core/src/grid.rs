//! North/East lattice paths and pairs of them.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridStep {
    E,
    N,
}

impl GridStep {
    pub fn flip(self) -> GridStep {
        match self {
            GridStep::N => GridStep::E,
            GridStep::E => GridStep::N,
        }
    }

    pub fn vector(self) -> (i32, i32) {
        match self {
            GridStep::N => (0, 1),
            GridStep::E => (1, 0),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            GridStep::N => 'N',
            GridStep::E => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPath {
    pub start: (i32, i32),
    pub steps: Vec<GridStep>,
}

impl GridPath {
    pub fn new(start: (i32, i32), steps: Vec<GridStep>) -> GridPath {
        GridPath { start, steps }
    }

    pub fn parse(start: (i32, i32), text: &str) -> Result<GridPath> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, ch)| match ch {
                'N' => Ok(GridStep::N),
                'E' => Ok(GridStep::E),
                _ => Err(Error::Parse { ch, index }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridPath { start, steps })
    }

    pub fn points(&self) -> Vec<(i32, i32)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = self.start;
        out.push((x, y));
        for s in &self.steps {
            let (dx, dy) = s.vector();
            x += dx;
            y += dy;
            out.push((x, y));
        }
        out
    }

    pub fn end(&self) -> (i32, i32) {
        *self.points().last().expect("at least the start point")
    }

    /// Number of consecutive `N`s before each `E`, followed by the number
    /// of terminal `N`s.
    pub fn north_runs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut run = 0;
        for s in &self.steps {
            match s {
                GridStep::N => run += 1,
                GridStep::E => {
                    out.push(run);
                    run = 0;
                }
            }
        }
        out.push(run);
        out
    }

    pub fn from_north_runs(start: (i32, i32), runs: &[usize]) -> GridPath {
        let mut steps = Vec::new();
        for (i, r) in runs.iter().enumerate() {
            steps.extend(std::iter::repeat_n(GridStep::N, *r));
            if i + 1 < runs.len() {
                steps.push(GridStep::E);
            }
        }
        GridPath { start, steps }
    }

    pub fn translated(&self, dx: i32, dy: i32) -> GridPath {
        GridPath {
            start: (self.start.0 + dx, self.start.1 + dy),
            steps: self.steps.clone(),
        }
    }
}

impl fmt::Display for GridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRole {
    /// A nonintersecting pair as counted by a two-by-two path determinant.
    RawGv,
    /// Bottom from `(1,0)` to `(r,s-1)`, top from `(0,1)` to `(r-1,s)`.
    Levine,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPathPair {
    pub bottom: GridPath,
    pub top: GridPath,
    pub role: PairRole,
}

impl GridPathPair {
    /// First shared lattice point, if any.
    pub fn intersection(&self) -> Option<(i32, i32)> {
        let b: HashSet<(i32, i32)> = self.bottom.points().into_iter().collect();
        self.top.points().into_iter().find(|p| b.contains(p))
    }

    pub fn is_nonintersecting(&self) -> bool {
        self.intersection().is_none()
    }

    pub fn check_nonintersecting(&self) -> Result<()> {
        match self.intersection() {
            Some((x, y)) => Err(Error::Intersecting { x, y }),
            None => Ok(()),
        }
    }

    /// Builds a validated Levine pair and reports its `(r, s)`.
    pub fn levine(bottom: Vec<GridStep>, top: Vec<GridStep>) -> Result<GridPathPair> {
        let pair = GridPathPair {
            bottom: GridPath::new((1, 0), bottom),
            top: GridPath::new((0, 1), top),
            role: PairRole::Levine,
        };
        pair.levine_params()?;
        Ok(pair)
    }

    /// `(r, s)` of a Levine pair, validating anchoring and nonintersection.
    pub fn levine_params(&self) -> Result<(usize, usize)> {
        if self.bottom.start != (1, 0) || self.top.start != (0, 1) {
            return Err(Error::MalformedPair(format!(
                "Levine pairs start at (1,0) and (0,1), got {:?} and {:?}",
                self.bottom.start, self.top.start
            )));
        }
        let (bx, by) = self.bottom.end();
        let (tx, ty) = self.top.end();
        if bx < 1 || ty < 1 || (tx, ty) != (bx - 1, by + 1) {
            return Err(Error::MalformedPair(format!(
                "endpoints ({bx},{by}) and ({tx},{ty}) are not (r,s-1) and (r-1,s)"
            )));
        }
        self.check_nonintersecting()?;
        Ok((bx as usize, ty as usize))
    }

    pub fn parse_levine(text: &str) -> Result<GridPathPair> {
        let (b, t) = split_pair(text)?;
        let pair = GridPathPair {
            bottom: GridPath::parse((1, 0), b)?,
            top: GridPath::parse((0, 1), t)?,
            role: PairRole::Levine,
        };
        pair.levine_params()?;
        Ok(pair)
    }
}

pub(crate) fn split_pair(text: &str) -> Result<(&str, &str)> {
    text.split_once('/')
        .ok_or_else(|| Error::MalformedPair(format!("expected BOTTOM/TOP, got {text:?}")))
}

/// `BOTTOM/TOP` step words.
impl fmt::Display for GridPathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.bottom, self.top)
    }
}
