//! Up/down lattice paths.
//!
//! A [`Path`] is a word over `{U, D}` packed into a `u64` (bit `i` set means
//! step `i` is an upstep). Vertices are numbered `0..=len`; step `i` runs
//! from vertex `i` to vertex `i + 1`, so the height of vertex `v` is
//! `2 * #U(steps 0..v) - v`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of steps a packed path can hold.
pub const MAX_STEPS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    U,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }

    pub fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// Immutable, bit-packed walk of up and down steps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Path {
    bits: u64,
    len: u8,
}

/// Which refinement of the balanced class a path belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathClass {
    Walk,
    Balanced,
    Dyck,
    InvertedDyck,
}

impl PathClass {
    pub fn name(self) -> &'static str {
        match self {
            PathClass::Walk => "unbalanced",
            PathClass::Balanced => "balanced",
            PathClass::Dyck => "Dyck",
            PathClass::InvertedDyck => "inverted Dyck",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InclineKind {
    Ascent,
    Descent,
}

/// A maximal run of equal steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incline {
    pub kind: InclineKind,
    pub start: usize,
    pub len: usize,
    pub is_initial: bool,
    pub is_terminal: bool,
}

impl Incline {
    pub fn is_interior(&self) -> bool {
        !self.is_initial && !self.is_terminal
    }

    pub fn is_long(&self) -> bool {
        self.len >= 2
    }

    pub fn is_ascent(&self) -> bool {
        self.kind == InclineKind::Ascent
    }

    /// One past the last step of the run; also the index of its final vertex.
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

impl Path {
    pub fn empty() -> Path {
        Path::default()
    }

    pub fn from_steps(steps: &[Step]) -> Result<Path> {
        if steps.len() > MAX_STEPS {
            return Err(Error::TooLong {
                len: steps.len(),
                max: MAX_STEPS,
            });
        }
        let mut bits = 0u64;
        for (i, s) in steps.iter().enumerate() {
            if *s == Step::U {
                bits |= 1 << i;
            }
        }
        Ok(Path {
            bits,
            len: steps.len() as u8,
        })
    }

    /// Builds a path from raw bits; bits at or above `len` must be clear.
    pub fn from_bits(bits: u64, len: usize) -> Path {
        debug_assert!(len <= MAX_STEPS);
        debug_assert!(len == 64 || bits >> len == 0);
        Path {
            bits,
            len: len as u8,
        }
    }

    /// Parses a raw walk; no balance requirement.
    pub fn parse(text: &str) -> Result<Path> {
        let mut steps = Vec::with_capacity(text.len());
        for (index, ch) in text.chars().enumerate() {
            match ch {
                'U' => steps.push(Step::U),
                'D' => steps.push(Step::D),
                _ => return Err(Error::Parse { ch, index }),
            }
        }
        Path::from_steps(&steps)
    }

    pub fn parse_balanced(text: &str) -> Result<Path> {
        let p = Path::parse(text)?;
        p.check_balanced()?;
        Ok(p)
    }

    pub fn parse_dyck(text: &str) -> Result<Path> {
        let p = Path::parse(text)?;
        p.check_dyck()?;
        Ok(p)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of upsteps.
    pub fn ups(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Semilength of a balanced path.
    pub fn size(&self) -> usize {
        self.len() / 2
    }

    pub fn step(&self, i: usize) -> Step {
        debug_assert!(i < self.len());
        if self.bits >> i & 1 == 1 {
            Step::U
        } else {
            Step::D
        }
    }

    pub fn is_up(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    pub fn to_steps(&self) -> Vec<Step> {
        self.steps().collect()
    }

    /// Height of vertex `v`, in O(1).
    pub fn height(&self, v: usize) -> i32 {
        debug_assert!(v <= self.len());
        let mask = if v >= 64 { u64::MAX } else { (1u64 << v) - 1 };
        2 * (self.bits & mask).count_ones() as i32 - v as i32
    }

    pub fn heights(&self) -> Vec<i32> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut cur = 0;
        h.push(cur);
        for s in self.steps() {
            cur += s.delta();
            h.push(cur);
        }
        h
    }

    pub fn min_height(&self) -> i32 {
        let mut cur = 0;
        let mut lo = 0;
        for s in self.steps() {
            cur += s.delta();
            lo = lo.min(cur);
        }
        lo
    }

    pub fn max_height(&self) -> i32 {
        let mut cur = 0;
        let mut hi = 0;
        for s in self.steps() {
            cur += s.delta();
            hi = hi.max(cur);
        }
        hi
    }

    pub fn is_balanced(&self) -> bool {
        self.ups() * 2 == self.len()
    }

    pub fn is_dyck(&self) -> bool {
        self.is_balanced() && self.min_height() >= 0
    }

    pub fn is_inverted_dyck(&self) -> bool {
        self.is_balanced() && self.max_height() <= 0
    }

    pub fn class(&self) -> PathClass {
        if !self.is_balanced() {
            PathClass::Walk
        } else if self.min_height() >= 0 {
            PathClass::Dyck
        } else if self.max_height() <= 0 {
            PathClass::InvertedDyck
        } else {
            PathClass::Balanced
        }
    }

    /// Rejects unbalanced walks, naming the first index that makes balance
    /// impossible: the first step where downs outnumber the steps that can
    /// still compensate, or the length when the totals differ.
    pub fn check_balanced(&self) -> Result<()> {
        let n2 = self.len();
        let mut h: i32 = 0;
        for i in 0..n2 {
            h += self.step(i).delta();
            let remaining = (n2 - i - 1) as i32;
            if h.abs() > remaining {
                return Err(Error::Unbalanced { index: i });
            }
        }
        if h != 0 {
            return Err(Error::Unbalanced { index: n2 });
        }
        Ok(())
    }

    pub fn check_dyck(&self) -> Result<()> {
        let mut h = 0;
        for i in 0..self.len() {
            h += self.step(i).delta();
            if h < 0 {
                return Err(Error::NotDyck { index: i });
            }
        }
        self.check_balanced()
    }

    pub fn check_inverted_dyck(&self) -> Result<()> {
        let mut h = 0;
        for i in 0..self.len() {
            h += self.step(i).delta();
            if h > 0 {
                return Err(Error::NotInvertedDyck { index: i });
            }
        }
        self.check_balanced()
    }

    pub fn concat(parts: &[Path]) -> Path {
        let mut bits = 0u64;
        let mut len = 0usize;
        for p in parts {
            assert!(len + p.len() <= MAX_STEPS, "concatenation too long");
            bits |= p.bits << len;
            len += p.len();
        }
        Path::from_bits(bits, len)
    }

    /// Steps `start..end` as a standalone path.
    pub fn slice(&self, start: usize, end: usize) -> Path {
        debug_assert!(start <= end && end <= self.len());
        let len = end - start;
        let bits = if len == 0 {
            0
        } else if len == 64 {
            self.bits
        } else {
            (self.bits >> start) & ((1u64 << len) - 1)
        };
        Path::from_bits(bits, len)
    }

    /// `U P D`.
    pub fn elevate(&self) -> Path {
        assert!(self.len() + 2 <= MAX_STEPS, "elevation too long");
        Path::from_bits((self.bits << 1) | 1, self.len() + 2)
    }

    /// Reverses the word and swaps the letters: the mirror image of the path.
    pub fn reverse_complement(&self) -> Path {
        let n = self.len();
        let mut bits = 0u64;
        for i in 0..n {
            if !self.is_up(i) {
                bits |= 1 << (n - 1 - i);
            }
        }
        Path::from_bits(bits, n)
    }

    /// Maximal runs of equal steps in left-to-right order.
    pub fn inclines(&self) -> Vec<Incline> {
        let mut out: Vec<Incline> = Vec::new();
        let n = self.len();
        let mut i = 0;
        while i < n {
            let s = self.step(i);
            let mut j = i + 1;
            while j < n && self.step(j) == s {
                j += 1;
            }
            out.push(Incline {
                kind: if s == Step::U {
                    InclineKind::Ascent
                } else {
                    InclineKind::Descent
                },
                start: i,
                len: j - i,
                is_initial: i == 0,
                is_terminal: j == n,
            });
            i = j;
        }
        out
    }

    pub fn ascents(&self) -> impl Iterator<Item = Incline> {
        self.inclines().into_iter().filter(|c| c.is_ascent())
    }

    /// Ascent lengths, left to right.
    pub fn ascent_lengths(&self) -> Vec<usize> {
        self.ascents().map(|a| a.len).collect()
    }

    pub fn descent_lengths(&self) -> Vec<usize> {
        self.inclines()
            .into_iter()
            .filter(|c| !c.is_ascent())
            .map(|c| c.len)
            .collect()
    }

    pub fn first_ascent_len(&self) -> usize {
        (0..self.len()).take_while(|&i| self.is_up(i)).count()
    }

    pub fn terminal_descent_len(&self) -> usize {
        (0..self.len())
            .rev()
            .take_while(|&i| !self.is_up(i))
            .count()
    }

    /// Downstep ending the shortest Dyck subpath that begins at upstep `u`.
    pub fn matching_downstep(&self, u: usize) -> Result<usize> {
        if u >= self.len() || !self.is_up(u) {
            return Err(Error::NotUpstep { index: u });
        }
        let mut h = 0;
        for j in u..self.len() {
            h += self.step(j).delta();
            if h == 0 {
                return Ok(j);
            }
        }
        Err(Error::NoMatchingVertex { vertex: u })
    }

    /// Downstep ending the longest Dyck subpath that begins at upstep `u`.
    pub fn associated_downstep(&self, u: usize) -> Result<usize> {
        if u >= self.len() || !self.is_up(u) {
            return Err(Error::NotUpstep { index: u });
        }
        let mut h = 0;
        let mut last = None;
        for j in u..self.len() {
            h += self.step(j).delta();
            if h < 0 {
                break;
            }
            if h == 0 {
                last = Some(j);
            }
        }
        last.ok_or(Error::NoMatchingVertex { vertex: u })
    }

    /// Upstep beginning the longest Dyck subpath that ends at downstep `d`.
    pub fn associated_upstep(&self, d: usize) -> Result<usize> {
        if d >= self.len() || self.is_up(d) {
            return Err(Error::Constraint(format!("step {d} is not a downstep")));
        }
        let mut h = 0;
        let mut last = None;
        for j in (0..=d).rev() {
            h -= self.step(j).delta();
            if h < 0 {
                break;
            }
            if h == 0 {
                last = Some(j);
            }
        }
        last.ok_or(Error::NoMatchingVertex { vertex: d + 1 })
    }

    /// Upstep whose matching downstep is `d`.
    pub fn matching_upstep(&self, d: usize) -> Result<usize> {
        if d >= self.len() || self.is_up(d) {
            return Err(Error::Constraint(format!("step {d} is not a downstep")));
        }
        let mut h = 0;
        for j in (0..=d).rev() {
            h -= self.step(j).delta();
            if h == 0 {
                return Ok(j);
            }
        }
        Err(Error::NoMatchingVertex { vertex: d + 1 })
    }

    /// First vertex east of `v` at the same height when `v` lies above
    /// ground; first vertex west of it when `v` lies below.
    pub fn matching_vertex(&self, v: usize) -> Result<usize> {
        if v > self.len() {
            return Err(Error::NoMatchingVertex { vertex: v });
        }
        let hv = self.height(v);
        let found = match hv.cmp(&0) {
            Ordering::Greater => (v + 1..=self.len()).find(|&w| self.height(w) == hv),
            Ordering::Less => (0..v).rev().find(|&w| self.height(w) == hv),
            Ordering::Equal => None,
        };
        found.ok_or(Error::NoMatchingVertex { vertex: v })
    }

    /// Vertices `v > 0` at height zero.
    pub fn returns(&self) -> usize {
        (1..=self.len()).filter(|&v| self.height(v) == 0).count()
    }

    /// Splits a Dyck path into its strict components.
    pub fn components(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut h = 0;
        for i in 0..self.len() {
            h += self.step(i).delta();
            if h == 0 {
                out.push(self.slice(start, i + 1));
                start = i + 1;
            }
        }
        out
    }

    /// Length of the first strict component of a Dyck path.
    pub fn first_component_len(&self) -> usize {
        let mut h = 0;
        for i in 0..self.len() {
            h += self.step(i).delta();
            if h == 0 {
                return i + 1;
            }
        }
        self.len()
    }

    /// Interior of the first component, `I(P)`.
    pub fn interior_of_first_component(&self) -> Result<Path> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let end = self.first_component_len();
        Ok(self.slice(1, end - 1))
    }

    /// Strict: nonempty and returning to ground only at the end.
    pub fn is_strict(&self) -> bool {
        !self.is_empty() && self.first_component_len() == self.len()
    }

    /// Contains a peak at level one.
    pub fn has_hill(&self) -> bool {
        (0..self.len().saturating_sub(1))
            .any(|i| self.is_up(i) && !self.is_up(i + 1) && self.height(i) == 0)
    }

    /// Hill-free. The empty path counts as Fine.
    pub fn is_fine(&self) -> bool {
        !self.has_hill()
    }

    pub fn starts_with(&self, prefix: &str) -> bool {
        prefix.len() <= self.len()
            && prefix
                .chars()
                .enumerate()
                .all(|(i, c)| self.step(i).as_char() == c)
    }

    pub fn ends_with(&self, suffix: &str) -> bool {
        let n = self.len();
        let k = suffix.len();
        k <= n
            && suffix
                .chars()
                .enumerate()
                .all(|(i, c)| self.step(n - k + i).as_char() == c)
    }
}

impl Ord for Path {
    /// Lexicographic on the text form, `D < U`, with prefixes first.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        for i in 0..common {
            match self.step(i).cmp(&other.step(i)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        Path::parse(s)
    }
}
