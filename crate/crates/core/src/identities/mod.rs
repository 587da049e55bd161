//! Closed forms for the path and tree identities, exact distributions by
//! enumeration, and a verifier that compares the two along with counts
//! transported through the bijections.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::FamilySpec;
use crate::error::{Error, Result};
use crate::stats::StatKind;
use crate::tree::TreeStat;

mod distribution;
mod verify;

pub use distribution::{distribution, Distribution, Statistic};
pub use verify::{verify, Discrepancy, RowCheck, Triple, Verdict, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    CatalanTotal,
    LongInterior,
    TreeNodes,
    FineTouchard,
    Touchard,
    Narayana,
    InteriorStrict,
    FineRefined,
    SchroderCounts,
    FineManifest,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 10] = [
        IdentityKind::CatalanTotal,
        IdentityKind::LongInterior,
        IdentityKind::TreeNodes,
        IdentityKind::FineTouchard,
        IdentityKind::Touchard,
        IdentityKind::Narayana,
        IdentityKind::InteriorStrict,
        IdentityKind::FineRefined,
        IdentityKind::SchroderCounts,
        IdentityKind::FineManifest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::CatalanTotal => "catalan",
            IdentityKind::LongInterior => "long-interior",
            IdentityKind::TreeNodes => "tree-nodes",
            IdentityKind::FineTouchard => "fine-touchard",
            IdentityKind::Touchard => "touchard",
            IdentityKind::Narayana => "narayana",
            IdentityKind::InteriorStrict => "interior-strict",
            IdentityKind::FineRefined => "fine-refined",
            IdentityKind::SchroderCounts => "schroder-counts",
            IdentityKind::FineManifest => "fine-manifest",
        }
    }

    /// Family the identity counts, at size `n`.
    pub fn family(self, n: usize) -> FamilySpec {
        match self {
            IdentityKind::TreeNodes => FamilySpec::Trees(n),
            IdentityKind::FineTouchard | IdentityKind::FineRefined => FamilySpec::Fine(n),
            IdentityKind::SchroderCounts => FamilySpec::Schroder(n),
            _ => FamilySpec::Dyck(n),
        }
    }

    /// Statistic the identity distributes over; `None` for plain totals.
    pub fn statistic(self) -> Option<Statistic> {
        Some(match self {
            IdentityKind::CatalanTotal | IdentityKind::FineManifest => return None,
            IdentityKind::LongInterior => Statistic::Path(StatKind::LongInteriorInclines),
            IdentityKind::TreeNodes => Statistic::Tree(TreeStat::NodesAdjLeaf),
            IdentityKind::FineTouchard | IdentityKind::Touchard => {
                Statistic::Path(StatKind::LongNoninitialAscents)
            }
            IdentityKind::Narayana => Statistic::Path(StatKind::Valleys),
            IdentityKind::InteriorStrict => Statistic::Path(StatKind::X1PlusX2),
            IdentityKind::FineRefined => Statistic::Path(StatKind::LongAscents),
            IdentityKind::SchroderCounts => Statistic::Flats,
        })
    }

    /// Smallest `n` the closed form holds at.
    pub fn n_min(self) -> usize {
        match self {
            IdentityKind::CatalanTotal | IdentityKind::FineManifest => 0,
            // the only 1-path is strict, so X = 1 where the summand has k = 0
            IdentityKind::InteriorStrict => 2,
            _ => 1,
        }
    }

    /// Largest `n_max` `verify` accepts.
    pub fn cap(self) -> usize {
        match self {
            IdentityKind::CatalanTotal
            | IdentityKind::FineTouchard
            | IdentityKind::Touchard
            | IdentityKind::Narayana
            | IdentityKind::FineManifest => 14,
            IdentityKind::LongInterior
            | IdentityKind::InteriorStrict
            | IdentityKind::FineRefined => 12,
            IdentityKind::TreeNodes => 12,
            IdentityKind::SchroderCounts => 9,
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdentityKind> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        IdentityKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// `C(a, b)` with `C(a, 0) = 1` for every `a`, and zero when `b < 0` or
/// `a < b`.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if b < 0 || (b > 0 && a < b) {
        return Ok(0);
    }
    let b = b.min(a - b).max(0);
    let mut r: i128 = 1;
    for i in 1..=b as i128 {
        r = r
            .checked_mul(a as i128 - b as i128 + i)
            .ok_or(Error::Overflow("binomial"))?
            / i;
    }
    Ok(r)
}

/// `C(a, b)` that is also zero for every negative `a`.
pub fn binomial_strict(a: i64, b: i64) -> Result<i128> {
    if a < 0 {
        return Ok(0);
    }
    binomial(a, b)
}

/// `2^e`, zero for negative `e`.
fn pow2(e: i64) -> Result<i128> {
    if e < 0 {
        return Ok(0);
    }
    1i128
        .checked_shl(e as u32)
        .ok_or(Error::Overflow("power of two"))
}

fn mul(xs: &[i128]) -> Result<i128> {
    xs.iter()
        .try_fold(1i128, |acc, &x| acc.checked_mul(x))
        .ok_or(Error::Overflow("product"))
}

fn exact_div(formula: &'static str, num: i128, den: i128) -> Result<i128> {
    if den == 0 || num % den != 0 {
        return Err(Error::InexactDivision { formula, num, den });
    }
    Ok(num / den)
}

fn to_count(kind: &'static str, v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Constraint(format!("{kind} evaluated to {v}")))
}

pub fn catalan(n: usize) -> Result<u64> {
    let n = n as i64;
    to_count(
        "catalan",
        exact_div("catalan", binomial(2 * n, n)?, n as i128 + 1)?,
    )
}

/// Fine numbers from `C_n = 2 F_n + F_{n-1}`, `F_0 = 1`.
pub fn fine_number(n: usize) -> Result<u64> {
    let mut f = 1i128;
    for m in 1..=n {
        f = exact_div("fine", catalan(m)? as i128 - f, 2)?;
    }
    to_count("fine", f)
}

/// Big Schröder numbers.
pub fn big_schroder(n: usize) -> Result<u64> {
    (0..=n)
        .map(|k| formula(IdentityKind::SchroderCounts, n, k))
        .sum()
}

/// Fine paths of size `n` with `j` short and `k` long ascents. The
/// factors count gap choices, so a negative number of gaps gives zero.
pub fn fine_refined(n: usize, j: usize, k: usize) -> Result<u64> {
    let (n, j, k) = (n as i64, j as i64, k as i64);
    let num = mul(&[
        binomial_strict(n - 1 - k, k - 1)?,
        binomial_strict(n - 2 * k, j)?,
        binomial_strict(n + 1, k)?,
    ])?;
    to_count(
        "fine-refined",
        exact_div("fine-refined", num, n as i128 + 1)?,
    )
}

/// The Narayana closed form with the `1/(n+1)` prefactor. It is not
/// integral in general; kept to report where it breaks.
pub fn narayana_with_n_plus_one(n: usize, k: usize) -> Result<u64> {
    let (n, k) = (n as i64, k as i64);
    let num = mul(&[binomial(n, k)?, binomial(n, k + 1)?])?;
    to_count(
        "narayana",
        exact_div("narayana 1/(n+1)", num, n as i128 + 1)?,
    )
}

/// Summand of `kind` at `(n, k)`. For `FineRefined` this is the marginal
/// over the number of short ascents.
pub fn formula(kind: IdentityKind, n: usize, k: usize) -> Result<u64> {
    let (ni, ki) = (n as i64, k as i64);
    let v: i128 = match kind {
        IdentityKind::CatalanTotal => {
            return if k == 0 { catalan(n) } else { Ok(0) };
        }
        IdentityKind::FineManifest => {
            return if k == 0 { fine_number(n) } else { Ok(0) };
        }
        IdentityKind::LongInterior => exact_div(
            "long-interior",
            mul(&[2, binomial(ni + 1, ki + 2)?, binomial(ni - 2, ki)?])?,
            ni as i128 + 1,
        )?,
        IdentityKind::TreeNodes => exact_div(
            "tree-nodes",
            mul(&[binomial(ni + 1, 2 * ki + 1)?, binomial(ni + ki, ki)?])?,
            ni as i128 + 1,
        )?,
        IdentityKind::FineTouchard => exact_div(
            "fine-touchard",
            mul(&[
                binomial(ni - 2 - ki, ki)?,
                pow2(ni - 2 - 2 * ki)?,
                binomial(ni + 1, ki + 1)?,
            ])?,
            ni as i128 + 1,
        )?,
        IdentityKind::Touchard => mul(&[
            binomial(ni - 1, 2 * ki)?,
            pow2(ni - 1 - 2 * ki)?,
            catalan(k)? as i128,
        ])?,
        IdentityKind::Narayana => {
            if n == 0 {
                i128::from(k == 0)
            } else {
                exact_div(
                    "narayana",
                    mul(&[binomial(ni, ki)?, binomial(ni, ki + 1)?])?,
                    ni as i128,
                )?
            }
        }
        IdentityKind::InteriorStrict => {
            let a = binomial(ni - 1, ki)?;
            mul(&[a, a])? - mul(&[binomial(ni + 1, ki + 2)?, binomial(ni - 3, ki - 2)?])?
        }
        IdentityKind::FineRefined => {
            let mut s = 0u64;
            for j in 0..=n {
                s += fine_refined(n, j, k)?;
            }
            s as i128
        }
        IdentityKind::SchroderCounts => {
            if k > n {
                0
            } else {
                mul(&[catalan(n - k)? as i128, binomial(2 * ni - ki, ki)?])?
            }
        }
    };
    to_count(kind.name(), v)
}

/// `formula(kind, n, k)` for `k = 0, 1, ...`, trailing zeros trimmed.
pub fn formula_row(kind: IdentityKind, n: usize) -> Result<Vec<u64>> {
    let mut row = (0..=n + 1)
        .map(|k| formula(kind, n, k))
        .collect::<Result<Vec<_>>>()?;
    trim(&mut row);
    Ok(row)
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}
