//! Schröder paths: upsteps, downsteps and double-width flat steps that stay
//! weakly above ground and end on it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchroderStep {
    D,
    F,
    U,
}

impl SchroderStep {
    pub fn delta(self) -> i32 {
        match self {
            SchroderStep::U => 1,
            SchroderStep::D => -1,
            SchroderStep::F => 0,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            SchroderStep::U => 'U',
            SchroderStep::D => 'D',
            SchroderStep::F => 'F',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SchroderPath {
    steps: Vec<SchroderStep>,
}

impl SchroderPath {
    pub fn new(steps: Vec<SchroderStep>) -> Result<SchroderPath> {
        let mut h = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::MalformedSchroder(format!(
                    "drops below ground at step {i}"
                )));
            }
        }
        if h != 0 {
            return Err(Error::MalformedSchroder(format!("ends at height {h}")));
        }
        Ok(SchroderPath { steps })
    }

    pub fn parse(text: &str) -> Result<SchroderPath> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, ch)| match ch {
                'U' => Ok(SchroderStep::U),
                'D' => Ok(SchroderStep::D),
                'F' => Ok(SchroderStep::F),
                _ => Err(Error::Parse { ch, index }),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps)
    }

    pub fn steps(&self) -> &[SchroderStep] {
        &self.steps
    }

    /// Half the horizontal extent.
    pub fn size(&self) -> usize {
        self.steps
            .iter()
            .map(|s| if *s == SchroderStep::F { 2 } else { 1 })
            .sum::<usize>()
            / 2
    }

    pub fn flats(&self) -> usize {
        self.steps.iter().filter(|s| **s == SchroderStep::F).count()
    }

    /// Heights at step boundaries, indexed by step position.
    pub fn heights(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        out.push(h);
        for s in &self.steps {
            h += s.delta();
            out.push(h);
        }
        out
    }

    pub fn has_ground_flat(&self) -> bool {
        let h = self.heights();
        self.steps
            .iter()
            .enumerate()
            .any(|(i, s)| *s == SchroderStep::F && h[i] == 0)
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<SchroderPath> {
        SchroderPath::parse(s)
    }
}
