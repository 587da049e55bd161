//! Exhaustive generators for every object family used by the identities.
//!
//! Walk families (Dyck, balanced, inverted Dyck) come from a successor
//! function over packed words in lexicographic order (`D < U`) with
//! height-feasibility pruning, so each object costs O(length) and no
//! recursion is involved. Marked families generate the base path and then
//! the admissible mark subsets.
//!
//! Desk-scale bounds (documented, not enforced): Dyck n ≤ 14, balanced
//! n ≤ 12, trees n ≤ 12, marked families n ≤ 9.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{GridPath, GridPathPair, GridStep, PairRole};
use crate::marked::{markable_vertices, MarkKind, MarkedPath};
use crate::path::{Path, MAX_STEPS};
use crate::schroder::{SchroderPath, SchroderStep};
use crate::tree::OrderedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkClass {
    Balanced,
    Dyck,
    InvertedDyck,
}

impl WalkClass {
    fn bounds(self) -> (i32, i32) {
        match self {
            WalkClass::Balanced => (i32::MIN / 2, i32::MAX / 2),
            WalkClass::Dyck => (0, i32::MAX / 2),
            WalkClass::InvertedDyck => (i32::MIN / 2, 0),
        }
    }
}

/// Successor-function generator of balanced words of one class.
#[derive(Debug, Clone)]
pub struct WalkIter {
    len: usize,
    fixed: usize,
    lo: i32,
    hi: i32,
    bits: u64,
    started: bool,
    done: bool,
}

impl WalkIter {
    pub fn new(n: usize, class: WalkClass) -> WalkIter {
        WalkIter::with_prefix(n, class, Path::empty())
    }

    /// Only the words that begin with `prefix`; disjoint prefixes give
    /// independent sub-streams.
    pub fn with_prefix(n: usize, class: WalkClass, prefix: Path) -> WalkIter {
        assert!(2 * n <= MAX_STEPS, "size {n} exceeds packed capacity");
        let (lo, hi) = class.bounds();
        let mut it = WalkIter {
            len: 2 * n,
            fixed: prefix.len(),
            lo,
            hi,
            bits: prefix.bits(),
            started: false,
            done: false,
        };
        let mut h = 0;
        for i in 0..prefix.len() {
            h += prefix.step(i).delta();
            if prefix.len() > it.len || !it.feasible(h, it.len - i - 1) {
                it.done = true;
                return it;
            }
        }
        it.fill_from(prefix.len(), h);
        it
    }

    fn feasible(&self, h: i32, remaining: usize) -> bool {
        h >= self.lo && h <= self.hi && (h.unsigned_abs() as usize) <= remaining
    }

    fn height(&self, v: usize) -> i32 {
        let mask = if v >= 64 { u64::MAX } else { (1u64 << v) - 1 };
        2 * (self.bits & mask).count_ones() as i32 - v as i32
    }

    /// Smallest feasible completion from position `pos` at height `h`.
    fn fill_from(&mut self, pos: usize, mut h: i32) {
        for i in pos..self.len {
            let rem = self.len - i - 1;
            if self.feasible(h - 1, rem) {
                self.bits &= !(1u64 << i);
                h -= 1;
            } else {
                self.bits |= 1u64 << i;
                h += 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        for i in (self.fixed..self.len).rev() {
            if self.bits >> i & 1 == 0 {
                let h = self.height(i) + 1;
                if self.feasible(h, self.len - i - 1) {
                    let keep = if i + 1 >= 64 {
                        u64::MAX
                    } else {
                        (1u64 << (i + 1)) - 1
                    };
                    self.bits = (self.bits & keep) | (1u64 << i);
                    self.fill_from(i + 1, h);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for WalkIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        let mask = if self.len >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        };
        Some(Path::from_bits(self.bits & mask, self.len))
    }
}

pub fn dyck_paths(n: usize) -> WalkIter {
    WalkIter::new(n, WalkClass::Dyck)
}

pub fn balanced_paths(n: usize) -> WalkIter {
    WalkIter::new(n, WalkClass::Balanced)
}

pub fn inverted_dyck_paths(n: usize) -> WalkIter {
    WalkIter::new(n, WalkClass::InvertedDyck)
}

/// Splits a walk family into sub-streams keyed by every feasible prefix of
/// length `depth`.
pub fn split_by_prefix(n: usize, class: WalkClass, depth: usize) -> Vec<WalkIter> {
    let depth = depth.min(2 * n);
    let mut prefixes: Vec<Path> = (0u64..1 << depth)
        .map(|bits| Path::from_bits(bits, depth))
        .collect();
    prefixes.sort();
    prefixes
        .into_iter()
        .map(|p| WalkIter::with_prefix(n, class, p))
        .filter(|it| !it.done)
        .collect()
}

pub fn trees(n: usize) -> impl Iterator<Item = OrderedTree> {
    dyck_paths(n).map(|p| OrderedTree::from_dyck(&p).expect("dyck"))
}

/// All `k`-subsets of `items`, lexicographic by position.
pub fn k_subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < items.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn schroder_paths(n: usize) -> Vec<SchroderPath> {
    fn go(rem: usize, h: usize, cur: &mut Vec<SchroderStep>, out: &mut Vec<SchroderPath>) {
        if rem == 0 {
            if h == 0 {
                out.push(SchroderPath::new(cur.clone()).expect("valid by construction"));
            }
            return;
        }
        // D < F < U
        if h > 0 {
            cur.push(SchroderStep::D);
            go(rem - 1, h - 1, cur, out);
            cur.pop();
        }
        if rem >= 2 && h + 2 <= rem {
            cur.push(SchroderStep::F);
            go(rem - 2, h, cur, out);
            cur.pop();
        }
        if h + 1 < rem {
            cur.push(SchroderStep::U);
            go(rem - 1, h + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * n, 0, &mut Vec::new(), &mut out);
    out
}

/// Words with `e` East steps and `nn` North steps, `E < N`.
pub fn grid_words(e: usize, nn: usize) -> Vec<Vec<GridStep>> {
    fn go(e: usize, nn: usize, cur: &mut Vec<GridStep>, out: &mut Vec<Vec<GridStep>>) {
        if e == 0 && nn == 0 {
            out.push(cur.clone());
            return;
        }
        if e > 0 {
            cur.push(GridStep::E);
            go(e - 1, nn, cur, out);
            cur.pop();
        }
        if nn > 0 {
            cur.push(GridStep::N);
            go(e, nn - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, nn, &mut Vec::new(), &mut out);
    out
}

/// Nonintersecting pairs with the given anchors.
pub fn nonintersecting_pairs(
    bottom_start: (i32, i32),
    bottom_end: (i32, i32),
    top_start: (i32, i32),
    top_end: (i32, i32),
    role: PairRole,
) -> Vec<GridPathPair> {
    let words = |s: (i32, i32), t: (i32, i32)| -> Vec<Vec<GridStep>> {
        let (dx, dy) = (t.0 - s.0, t.1 - s.1);
        if dx < 0 || dy < 0 {
            Vec::new()
        } else {
            grid_words(dx as usize, dy as usize)
        }
    };
    let bottoms = words(bottom_start, bottom_end);
    let tops = words(top_start, top_end);
    let mut out = Vec::new();
    for b in &bottoms {
        for t in &tops {
            let pair = GridPathPair {
                bottom: GridPath::new(bottom_start, b.clone()),
                top: GridPath::new(top_start, t.clone()),
                role,
            };
            if pair.is_nonintersecting() {
                out.push(pair);
            }
        }
    }
    out
}

pub fn levine_pairs(r: usize, s: usize) -> Vec<GridPathPair> {
    if r == 0 || s == 0 {
        return Vec::new();
    }
    let (r, s) = (r as i32, s as i32);
    nonintersecting_pairs((1, 0), (r, s - 1), (0, 1), (r - 1, s), PairRole::Levine)
}

/// Which determinant the raw pairs realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GvVariant {
    /// Bottom `(1,0)→(k+2,n-1-k)`, top `(0,1)→(k,n-1-k)`.
    LongInterior,
    /// Bottom `(2,0)→(k+2,n-1-k)`, top `(0,0)→(k,n-1-k)`.
    InteriorStrict,
}

impl GvVariant {
    pub fn anchors(self, n: usize, k: usize) -> [(i32, i32); 4] {
        let (n, k) = (n as i32, k as i32);
        match self {
            GvVariant::LongInterior => [(1, 0), (k + 2, n - 1 - k), (0, 1), (k, n - 1 - k)],
            GvVariant::InteriorStrict => [(2, 0), (k + 2, n - 1 - k), (0, 0), (k, n - 1 - k)],
        }
    }
}

pub fn gv_pairs(variant: GvVariant, n: usize, k: usize) -> Vec<GridPathPair> {
    let [bs, be, ts, te] = variant.anchors(n, k);
    nonintersecting_pairs(bs, be, ts, te, PairRole::RawGv)
}

fn base_paths(n: usize, base: WalkClass) -> WalkIter {
    WalkIter::new(n, base)
}

pub fn marked_paths(
    n: usize,
    marks: usize,
    kind: MarkKind,
    base: WalkClass,
) -> impl Iterator<Item = MarkedPath> {
    base_paths(n, base).flat_map(move |p| {
        let cands = markable_vertices(&p, kind);
        k_subsets(&cands, marks)
            .into_iter()
            .map(move |m| MarkedPath {
                path: p,
                marks: m,
                kind,
            })
    })
}

/// DF-marked balanced paths with `n - 2k` marks where every ascent's
/// length minus its mark count is even.
pub fn marked_df_parity(n: usize, k: usize) -> impl Iterator<Item = MarkedPath> {
    let marks = n.checked_sub(2 * k);
    balanced_paths(if marks.is_some() { n } else { 0 })
        .filter(move |_| marks.is_some())
        .flat_map(move |p| {
            let cands = markable_vertices(&p, MarkKind::Df);
            k_subsets(&cands, marks.unwrap_or(0))
                .into_iter()
                .map(move |m| MarkedPath {
                    path: p,
                    marks: m,
                    kind: MarkKind::Df,
                })
                .filter(|mp| mp.satisfies_parity())
        })
}

/// Fine-like IA paths with `j` marks and `k` ascents, all long.
pub fn finelike_paths(
    n: usize,
    j: usize,
    k: usize,
    base: WalkClass,
) -> impl Iterator<Item = MarkedPath> {
    base_paths(n, base).flat_map(move |p| {
        let asc = p.ascent_lengths();
        let ok = asc.len() == k && asc.iter().all(|&l| l >= 2);
        let cands: Vec<usize> = if ok {
            p.ascents().flat_map(|a| a.start + 2..a.end()).collect()
        } else {
            Vec::new()
        };
        let subsets = if ok { k_subsets(&cands, j) } else { Vec::new() };
        subsets.into_iter().map(move |m| MarkedPath {
            path: p,
            marks: m,
            kind: MarkKind::Ia,
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Dyck(usize),
    /// Hill-free Dyck paths.
    Fine(usize),
    Balanced(usize),
    InvertedDyck(usize),
    Schroder(usize),
    Trees(usize),
    MarkedIa {
        n: usize,
        k: usize,
        base: WalkClass,
    },
    MarkedDf {
        n: usize,
        k: usize,
        base: WalkClass,
    },
    /// `n - 2k` marks.
    MarkedDfParity {
        n: usize,
        k: usize,
    },
    Levine {
        r: usize,
        s: usize,
    },
    GvPair {
        variant: GvVariant,
        n: usize,
        k: usize,
    },
    FineLike {
        n: usize,
        j: usize,
        k: usize,
        base: WalkClass,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    Path(Path),
    Marked(MarkedPath),
    Schroder(SchroderPath),
    Tree(OrderedTree),
    Pair(GridPathPair),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Path(p) => write!(f, "{p}"),
            Object::Marked(m) => write!(f, "{m}"),
            Object::Schroder(s) => write!(f, "{s}"),
            Object::Tree(t) => write!(f, "{}", t.to_dyck()),
            Object::Pair(p) => write!(f, "{p}"),
        }
    }
}

/// Streams every object of the family exactly once, in a fixed order.
/// The stream is restartable: calling again yields the same sequence.
pub fn enumerate(spec: FamilySpec) -> Box<dyn Iterator<Item = Object>> {
    use FamilySpec::*;
    match spec {
        Dyck(n) => Box::new(dyck_paths(n).map(Object::Path)),
        Fine(n) => Box::new(dyck_paths(n).filter(|p| p.is_fine()).map(Object::Path)),
        Balanced(n) => Box::new(balanced_paths(n).map(Object::Path)),
        InvertedDyck(n) => Box::new(inverted_dyck_paths(n).map(Object::Path)),
        Schroder(n) => Box::new(schroder_paths(n).into_iter().map(Object::Schroder)),
        Trees(n) => Box::new(trees(n).map(Object::Tree)),
        MarkedIa { n, k, base } => {
            Box::new(marked_paths(n, k, MarkKind::Ia, base).map(Object::Marked))
        }
        MarkedDf { n, k, base } => {
            Box::new(marked_paths(n, k, MarkKind::Df, base).map(Object::Marked))
        }
        MarkedDfParity { n, k } => Box::new(marked_df_parity(n, k).map(Object::Marked)),
        Levine { r, s } => Box::new(levine_pairs(r, s).into_iter().map(Object::Pair)),
        GvPair { variant, n, k } => Box::new(gv_pairs(variant, n, k).into_iter().map(Object::Pair)),
        FineLike { n, j, k, base } => Box::new(finelike_paths(n, j, k, base).map(Object::Marked)),
    }
}

/// Cardinality by full enumeration.
pub fn count(spec: FamilySpec) -> u64 {
    enumerate(spec).count() as u64
}

impl FamilySpec {
    /// Documented desk-scale bound on the size parameter.
    pub fn desk_bound(&self) -> usize {
        use FamilySpec::*;
        match self {
            Dyck(_) | Fine(_) => 14,
            Balanced(_) | InvertedDyck(_) | Trees(_) => 12,
            Schroder(_) => 10,
            MarkedIa { .. } | MarkedDf { .. } | MarkedDfParity { .. } | FineLike { .. } => 10,
            Levine { .. } | GvPair { .. } => 14,
        }
    }

    pub fn size(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Dyck(n) | Fine(n) | Balanced(n) | InvertedDyck(n) | Schroder(n) | Trees(n) => n,
            MarkedIa { n, .. } | MarkedDf { n, .. } | MarkedDfParity { n, .. } => n,
            FineLike { n, .. } | GvPair { n, .. } => n,
            Levine { r, s } => (r + s).saturating_sub(1),
        }
    }
}

fn base_suffix(base: WalkClass) -> &'static str {
    match base {
        WalkClass::Dyck => "-dyck",
        _ => "",
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Dyck(n) => write!(f, "dyck:{n}"),
            Fine(n) => write!(f, "fine:{n}"),
            Balanced(n) => write!(f, "balanced:{n}"),
            InvertedDyck(n) => write!(f, "inverted-dyck:{n}"),
            Schroder(n) => write!(f, "schroder:{n}"),
            Trees(n) => write!(f, "trees:{n}"),
            MarkedIa { n, k, base } => write!(f, "marked-ia{}:{n},{k}", base_suffix(base)),
            MarkedDf { n, k, base } => write!(f, "marked-df{}:{n},{k}", base_suffix(base)),
            MarkedDfParity { n, k } => write!(f, "marked-df-parity:{n},{k}"),
            Levine { r, s } => write!(f, "levine:{r},{s}"),
            GvPair { variant, n, k } => match variant {
                GvVariant::LongInterior => write!(f, "gv-pair:{n},{k}"),
                GvVariant::InteriorStrict => write!(f, "gv-pair-strict:{n},{k}"),
            },
            FineLike { n, j, k, base } => write!(f, "finelike{}:{n},{j},{k}", base_suffix(base)),
        }
    }
}

/// Parses `name:p1,p2,...`, for example `dyck:5`, `marked-df-parity:8,2`,
/// `finelike-dyck:12,3,4`, `levine:4,5`, `gv-pair:5,1`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let (name, params) = s.split_once(':').ok_or_else(unknown)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(unknown())
            }
        };
        let name = name.to_ascii_lowercase();
        let spec = match name.as_str() {
            "dyck" => want(1).map(|_| FamilySpec::Dyck(nums[0]))?,
            "fine" => want(1).map(|_| FamilySpec::Fine(nums[0]))?,
            "balanced" => want(1).map(|_| FamilySpec::Balanced(nums[0]))?,
            "inverted-dyck" => want(1).map(|_| FamilySpec::InvertedDyck(nums[0]))?,
            "schroder" => want(1).map(|_| FamilySpec::Schroder(nums[0]))?,
            "trees" => want(1).map(|_| FamilySpec::Trees(nums[0]))?,
            "marked-ia" | "marked-ia-dyck" | "marked-df" | "marked-df-dyck" => {
                want(2)?;
                let base = if name.ends_with("-dyck") {
                    WalkClass::Dyck
                } else {
                    WalkClass::Balanced
                };
                let (n, k) = (nums[0], nums[1]);
                if name.starts_with("marked-ia") {
                    FamilySpec::MarkedIa { n, k, base }
                } else {
                    FamilySpec::MarkedDf { n, k, base }
                }
            }
            "marked-df-parity" => want(2).map(|_| FamilySpec::MarkedDfParity {
                n: nums[0],
                k: nums[1],
            })?,
            "levine" => want(2).map(|_| FamilySpec::Levine {
                r: nums[0],
                s: nums[1],
            })?,
            "gv-pair" | "gv-pair-strict" => {
                want(2)?;
                let variant = if name == "gv-pair" {
                    GvVariant::LongInterior
                } else {
                    GvVariant::InteriorStrict
                };
                FamilySpec::GvPair {
                    variant,
                    n: nums[0],
                    k: nums[1],
                }
            }
            "finelike" | "finelike-dyck" => {
                want(3)?;
                FamilySpec::FineLike {
                    n: nums[0],
                    j: nums[1],
                    k: nums[2],
                    base: if name == "finelike" {
                        WalkClass::Balanced
                    } else {
                        WalkClass::Dyck
                    },
                }
            }
            _ => return Err(unknown()),
        };
        Ok(spec)
    }
}
