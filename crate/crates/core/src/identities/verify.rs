use std::collections::HashSet;
use std::fmt;

use crate::bijections::{
    chain_a, chain_b, df_to_schroder, dimer_to_hill, du_to_dxd, finelike_to_fine, gv_adjust,
    levine_to_dyck, marks_to_odd_ascents, GvClass,
};
use crate::enumerate::{
    dyck_paths, finelike_paths, gv_pairs, marked_df_parity, marked_paths, schroder_paths, trees,
    FamilySpec, GvVariant, WalkClass,
};
use crate::error::{Error, Result};
use crate::marked::MarkKind;
use crate::stats::{statistic_unchecked as st, StatKind};
use crate::tree::OrderedTree;

use super::{distribution, fine_refined, formula_row, narayana_with_n_plus_one, trim};
use super::{IdentityKind, Statistic};

/// Largest size at which transports through marked families run.
const MARKED_TRANSPORT_MAX: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub n: usize,
    /// Number of short ascents, for the refined Fine count only.
    pub j: Option<usize>,
    pub formula: Vec<u64>,
    pub enumerated: Vec<u64>,
    pub transported: Option<Vec<u64>>,
    /// Further distributions that must equal the formula.
    pub also: Vec<(String, Vec<u64>)>,
}

impl RowCheck {
    /// Every available count equals the formula.
    pub fn agrees(&self) -> bool {
        self.formula == self.enumerated
            && self.transported.as_ref().is_none_or(|t| *t == self.formula)
            && self.also.iter().all(|(_, v)| *v == self.formula)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    pub j: Option<usize>,
    pub k: Option<usize>,
    pub detail: String,
    pub witness: Option<String>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, ": {}", self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One `(n, k)` entry: formula, enumeration, and transport when available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub n: usize,
    pub j: Option<usize>,
    pub k: usize,
    pub formula: u64,
    pub enumerated: u64,
    pub transported: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityKind,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<RowCheck>,
    pub notes: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn triples(&self) -> Vec<Triple> {
        let at = |v: &[u64], k: usize| v.get(k).copied().unwrap_or(0);
        let mut out = Vec::new();
        for r in &self.rows {
            let width = r
                .formula
                .len()
                .max(r.enumerated.len())
                .max(r.transported.as_ref().map_or(0, Vec::len));
            for k in 0..width {
                out.push(Triple {
                    n: r.n,
                    j: r.j,
                    k,
                    formula: at(&r.formula, k),
                    enumerated: at(&r.enumerated, k),
                    transported: r.transported.as_ref().map(|t| at(t, k)),
                });
            }
        }
        out
    }

    fn push(&mut self, row: RowCheck) {
        let first_diff =
            |a: &[u64], b: &[u64]| (0..a.len().max(b.len())).find(|&k| a.get(k) != b.get(k));
        let mut found = Vec::new();
        if let Some(k) = first_diff(&row.formula, &row.enumerated) {
            found.push((
                k,
                format!(
                    "formula {:?} != enumerated {:?}",
                    row.formula, row.enumerated
                ),
            ));
        }
        if let Some(t) = &row.transported {
            if let Some(k) = first_diff(&row.formula, t) {
                found.push((k, format!("formula {:?} != transported {t:?}", row.formula)));
            }
        }
        for (name, v) in &row.also {
            if let Some(k) = first_diff(&row.formula, v) {
                found.push((k, format!("formula {:?} != {name} {v:?}", row.formula)));
            }
        }
        for (k, detail) in found {
            self.discrepancies.push(Discrepancy {
                n: row.n,
                j: row.j,
                k: Some(k),
                detail,
                witness: None,
            });
        }
        self.rows.push(row);
    }

    fn fail(&mut self, n: usize, detail: impl Into<String>, witness: Option<String>) {
        self.discrepancies.push(Discrepancy {
            n,
            j: None,
            k: None,
            detail: detail.into(),
            witness,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} n={}..={}: {}",
            self.identity, self.n_min, self.n_max, self.verdict
        )?;
        for r in &self.rows {
            match r.j {
                Some(j) => write!(f, "  n={} j={j}:", r.n)?,
                None => write!(f, "  n={}:", r.n)?,
            }
            write!(f, " formula {:?} enumerated {:?}", r.formula, r.enumerated)?;
            if let Some(t) = &r.transported {
                write!(f, " transported {t:?}")?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for d in &self.discrepancies {
            writeln!(f, "  discrepancy: {d}")?;
        }
        Ok(())
    }
}

fn tally(values: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v = Vec::new();
    for x in values {
        if v.len() <= x {
            v.resize(x + 1, 0);
        }
        v[x] += 1;
    }
    trim(&mut v);
    v
}

fn enumerated(kind: IdentityKind, n: usize) -> Result<Vec<u64>> {
    let stat = kind.statistic().expect("distributed identity");
    Ok(distribution(kind.family(n), stat)?.counts)
}

fn row(n: usize, formula: Vec<u64>, enumerated: Vec<u64>) -> RowCheck {
    RowCheck {
        n,
        j: None,
        formula,
        enumerated,
        transported: None,
        also: Vec::new(),
    }
}

/// Checks `kind` at every size from its minimum up to `n_max`.
pub fn verify(kind: IdentityKind, n_max: usize) -> Result<VerificationReport> {
    if n_max > kind.cap() {
        return Err(Error::SizeOverBound {
            what: kind.to_string(),
            size: n_max,
            bound: kind.cap(),
        });
    }
    let mut r = VerificationReport {
        identity: kind,
        n_min: kind.n_min(),
        n_max,
        rows: Vec::new(),
        notes: Vec::new(),
        discrepancies: Vec::new(),
        verdict: Verdict::Pass,
    };
    for n in kind.n_min()..=n_max {
        match kind {
            IdentityKind::CatalanTotal => catalan_row(&mut r, n)?,
            IdentityKind::LongInterior => long_interior_row(&mut r, n)?,
            IdentityKind::TreeNodes => tree_nodes_row(&mut r, n)?,
            IdentityKind::FineTouchard => fine_touchard_row(&mut r, n)?,
            IdentityKind::Touchard | IdentityKind::InteriorStrict => {
                let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
                if kind == IdentityKind::InteriorStrict {
                    c.transported = Some(interior_strict_transport(&mut r, n)?);
                }
                r.push(c);
            }
            IdentityKind::Narayana => narayana_row(&mut r, n)?,
            IdentityKind::FineRefined => fine_refined_rows(&mut r, n)?,
            IdentityKind::SchroderCounts => schroder_row(&mut r, n)?,
            IdentityKind::FineManifest => fine_manifest_row(&mut r, n)?,
        }
    }
    if kind == IdentityKind::Narayana {
        let broken = (1..=n_max.max(2))
            .flat_map(|n| (0..n).map(move |k| (n, k)))
            .find(|&(n, k)| narayana_with_n_plus_one(n, k).is_err());
        if let Some((n, k)) = broken {
            r.notes.push(format!(
                "erratum: the prefactor 1/(n+1) is not integral (first at n={n}, k={k}); \
                 enumeration fixes 1/n"
            ));
        }
    }
    if kind == IdentityKind::InteriorStrict {
        r.notes
            .push("n=1: UD is strict, so its X is 1 while the summand sits at k=0".into());
    }
    if !r.discrepancies.is_empty() {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

fn catalan_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let mut c = row(
        n,
        formula_row(IdentityKind::CatalanTotal, n)?,
        vec![dyck_paths(n).count() as u64],
    );
    c.transported = Some(vec![trees(n).count() as u64]);
    r.push(c);
    Ok(())
}

/// Long interior inclines of the chain images of the adjusted pairs.
fn long_interior_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let kind = IdentityKind::LongInterior;
    let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
    if n >= 2 {
        let mut seen = HashSet::new();
        let mut values = Vec::new();
        for k in 0..=n - 2 {
            for raw in gv_pairs(GvVariant::LongInterior, n, k) {
                let adj = gv_adjust(&raw, GvVariant::LongInterior)?;
                let p = match adj.class {
                    GvClass::A => chain_a(&adj.pair)?,
                    GvClass::B => chain_b(&adj.pair)?,
                };
                let v = st(&p, StatKind::LongInteriorInclines) as usize;
                if v != k {
                    r.fail(
                        n,
                        format!("pair counted at k={k} lands at k={v}"),
                        Some(raw.to_string()),
                    );
                }
                if !seen.insert(p) {
                    r.fail(n, "two pairs share a chain image", Some(p.to_string()));
                }
                values.push(v);
            }
        }
        c.transported = Some(tally(values));
    } else {
        r.notes.push(format!("n={n}: no pairs to transport"));
    }
    r.push(c);
    Ok(())
}

/// Dyck images of the parity-marked paths, sent through `dimer_to_hill`
/// and the tree correspondence.
fn tree_nodes_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let kind = IdentityKind::TreeNodes;
    let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
    if n <= MARKED_TRANSPORT_MAX {
        let mut values = Vec::new();
        let mut marked = Vec::new();
        for k in 0..=n / 2 {
            let mut total = 0u64;
            for m in marked_df_parity(n, k) {
                total += 1;
                let q = marks_to_odd_ascents(&m)?;
                if !q.is_dyck() {
                    continue;
                }
                let h = dimer_to_hill(&q)?;
                let t = OrderedTree::from_dyck(&h)?;
                let v = t.nodes_adjacent_to_leaf();
                if v != k {
                    r.fail(
                        n,
                        format!("marked path at k={k} lands at k={v}"),
                        Some(m.to_string()),
                    );
                }
                values.push(v);
            }
            marked.push(total / (n as u64 + 1));
            if !total.is_multiple_of(n as u64 + 1) {
                r.fail(
                    n,
                    format!("{total} parity-marked paths at k={k}, not a multiple of n+1"),
                    None,
                );
            }
        }
        trim(&mut marked);
        c.transported = Some(tally(values));
        c.also.push(("parity-marked/(n+1)".into(), marked));
    }
    r.push(c);
    Ok(())
}

fn fine_touchard_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let kind = IdentityKind::FineTouchard;
    let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
    let sum: u64 = c.enumerated.iter().sum();
    let fine = super::fine_number(n)?;
    if sum != fine {
        r.fail(
            n,
            format!("row sum {sum} differs from the Fine number {fine}"),
            None,
        );
    }
    if n <= MARKED_TRANSPORT_MAX {
        let mut values = Vec::new();
        for k in 1..=n / 2 {
            for j in 0..=n - 2 * k {
                let mut dyck = 0u64;
                for m in finelike_paths(n, j, k, WalkClass::Dyck) {
                    dyck += 1;
                    let q = finelike_to_fine(&m)?;
                    values.push(st(&q, StatKind::LongNoninitialAscents) as usize);
                }
                if n <= 7 {
                    let balanced = finelike_paths(n, j, k, WalkClass::Balanced).count() as u64;
                    if balanced != (n as u64 + 1) * dyck {
                        r.fail(
                            n,
                            format!(
                                "j={j} k={k}: {balanced} balanced vs {dyck} Dyck Fine-like paths"
                            ),
                            None,
                        );
                    }
                }
            }
        }
        c.transported = Some(tally(values));
    }
    r.push(c);
    Ok(())
}

fn narayana_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let kind = IdentityKind::Narayana;
    let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
    for s in [StatKind::Dxd, StatKind::LongNonterminalInclines] {
        let d = distribution(FamilySpec::Dyck(n), Statistic::Path(s))?;
        c.also.push((s.to_string(), d.counts));
    }
    r.push(c);
    Ok(())
}

fn interior_strict_transport(r: &mut VerificationReport, n: usize) -> Result<Vec<u64>> {
    let mut seen = HashSet::new();
    let mut counts = Vec::new();
    for k in 0..n {
        let mut m = 0u64;
        for raw in gv_pairs(GvVariant::InteriorStrict, n, k) {
            let adj = gv_adjust(&raw, GvVariant::InteriorStrict)?;
            let p = levine_to_dyck(&adj.pair)?;
            if !seen.insert(p) {
                r.fail(n, "two pairs share an image", Some(p.to_string()));
            }
            m += 1;
        }
        counts.push(m);
    }
    trim(&mut counts);
    Ok(counts)
}

fn fine_refined_rows(r: &mut VerificationReport, n: usize) -> Result<()> {
    let mut by_jk: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for p in dyck_paths(n).filter(|p| p.is_fine()) {
        let j = st(&p, StatKind::ShortAscents) as usize;
        let k = st(&p, StatKind::LongAscents) as usize;
        let v = &mut by_jk[j];
        if v.len() <= k {
            v.resize(k + 1, 0);
        }
        v[k] += 1;
    }
    for (j, mut enumerated) in by_jk.into_iter().enumerate() {
        trim(&mut enumerated);
        let mut formula = (0..=n / 2 + 1)
            .map(|k| fine_refined(n, j, k))
            .collect::<Result<Vec<_>>>()?;
        trim(&mut formula);
        let transported = if n <= MARKED_TRANSPORT_MAX {
            let mut t: Vec<u64> = (0..=n / 2)
                .map(|k| finelike_paths(n, j, k, WalkClass::Dyck).count() as u64)
                .collect();
            trim(&mut t);
            Some(t)
        } else {
            None
        };
        r.push(RowCheck {
            n,
            j: Some(j),
            formula,
            enumerated,
            transported,
            also: Vec::new(),
        });
    }
    Ok(())
}

fn schroder_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let kind = IdentityKind::SchroderCounts;
    let mut c = row(n, formula_row(kind, n)?, enumerated(kind, n)?);
    let mut flats = Vec::new();
    let (mut df, mut ia) = (0u64, 0u64);
    for k in 0..=n {
        for m in marked_paths(n, k, MarkKind::Df, WalkClass::Dyck) {
            df += 1;
            flats.push(df_to_schroder(&m)?.flats());
        }
        ia += marked_paths(n, k, MarkKind::Ia, WalkClass::Dyck).count() as u64;
    }
    c.transported = Some(tally(flats));
    let paths = schroder_paths(n);
    let ground = paths.iter().filter(|s| s.has_ground_flat()).count();
    if df != 2 * ia {
        r.fail(n, format!("r_n = {df} but s_n = {ia}"), None);
    }
    if 2 * ground != paths.len() {
        r.fail(
            n,
            format!("{ground} of {} paths have a ground-level flat", paths.len()),
            None,
        );
    }
    r.notes.push(format!(
        "n={n}: r_n = {df}, s_n = {ia}, ground-level flat in {ground} of {}",
        paths.len()
    ));
    r.push(c);
    Ok(())
}

fn fine_manifest_row(r: &mut VerificationReport, n: usize) -> Result<()> {
    let mut even = 0u64;
    let mut images = 0u64;
    for p in dyck_paths(n).filter(|p| p.terminal_descent_len() % 2 == 0) {
        even += 1;
        let q = du_to_dxd(&p)?;
        if q.has_hill() {
            r.fail(n, "image has a hill", Some(format!("{p} -> {q}")));
        } else {
            images += 1;
        }
    }
    let hill_free = dyck_paths(n).filter(|p| p.is_fine()).count() as u64;
    let mut c = row(n, formula_row(IdentityKind::FineManifest, n)?, vec![even]);
    trim(&mut c.enumerated);
    c.transported = Some(vec![images]);
    c.also.push(("hill-free".into(), vec![hill_free]));
    for v in c
        .transported
        .iter_mut()
        .chain(c.also.iter_mut().map(|(_, v)| v))
    {
        trim(v);
    }
    r.push(c);
    Ok(())
}
