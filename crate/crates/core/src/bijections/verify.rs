//! Exhaustive round-trip and statistic-transport checks for every
//! registered bijection.

use std::collections::HashSet;
use std::fmt;

use crate::enumerate::{
    balanced_paths, dyck_paths, finelike_paths, gv_pairs, inverted_dyck_paths, levine_pairs,
    marked_df_parity, marked_paths, schroder_paths, GvVariant, WalkClass,
};
use crate::error::{Error, Result};
use crate::grid::GridStep;
use crate::marked::MarkKind;
use crate::path::Path;
use crate::stats::{statistic_unchecked as st, x_statistic, StatKind};

use super::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    pub source: String,
    pub target: String,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub name: String,
    pub size: usize,
    pub domain: String,
    pub codomain: String,
    pub checked: u64,
    pub round_trip_ok: bool,
    pub transported_statistics: Vec<Transport>,
    pub counterexample: Option<String>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.round_trip_ok && self.transported_statistics.iter().all(|t| t.verified)
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} n={}: {} -> {}, {} objects, round trip {}",
            self.name,
            self.size,
            self.domain,
            self.codomain,
            self.checked,
            if self.round_trip_ok { "ok" } else { "FAILED" }
        )?;
        for t in &self.transported_statistics {
            writeln!(
                f,
                "  {} -> {}: {}",
                t.source,
                t.target,
                if t.verified { "ok" } else { "FAILED" }
            )?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Registered names with the largest size `verify_bijection` accepts.
pub const BIJECTIONS: &[(&str, usize)] = &[
    ("cycle_rotate", 11),
    ("df_to_schroder", 9),
    ("du_to_dxd", 13),
    ("dxd_to_du_explicit", 12),
    ("deutsch_involution", 13),
    ("reverse_path", 13),
    ("levine_to_dyck", 12),
    ("gv_adjust", 12),
    ("gv_adjust_strict", 12),
    ("marks_to_odd_ascents", 9),
    ("dimer_to_hill", 13),
    ("finelike_to_fine", 10),
];

struct Checker {
    report: BijectionReport,
}

impl Checker {
    fn new(name: &str, n: usize, domain: &str, codomain: &str) -> Checker {
        Checker {
            report: BijectionReport {
                name: name.to_string(),
                size: n,
                domain: domain.to_string(),
                codomain: codomain.to_string(),
                checked: 0,
                round_trip_ok: true,
                transported_statistics: Vec::new(),
                counterexample: None,
            },
        }
    }

    fn witness(&mut self, w: String) {
        if self.report.counterexample.is_none() {
            self.report.counterexample = Some(w);
        }
    }

    fn round_trip(&mut self, ok: bool, w: impl FnOnce() -> String) {
        if !ok {
            self.report.round_trip_ok = false;
            self.witness(w());
        }
    }

    fn transport(&mut self, source: &str, target: &str) -> usize {
        self.report.transported_statistics.push(Transport {
            source: source.to_string(),
            target: target.to_string(),
            verified: true,
        });
        self.report.transported_statistics.len() - 1
    }

    fn check(&mut self, t: usize, ok: bool, w: impl FnOnce() -> String) {
        if !ok {
            self.report.transported_statistics[t].verified = false;
            self.witness(w());
        }
    }

    fn finish(mut self, images: usize, expected: usize) -> BijectionReport {
        if images != expected {
            self.report.round_trip_ok = false;
            self.witness(format!("{images} distinct images, expected {expected}"));
        }
        self.report
    }
}

/// Number of trailing `UD` factors preceded by a nonempty prefix.
pub fn terminal_uds(p: &Path) -> usize {
    let mut k = 0;
    let mut end = p.len();
    while end >= 4 && p.slice(end - 2, end).to_string() == "UD" {
        k += 1;
        end -= 2;
    }
    k
}

/// Length of the first descent.
pub fn first_descent_len(p: &Path) -> usize {
    p.descent_lengths().first().copied().unwrap_or(0)
}

/// Nonempty, and every descent that ends at ground level has odd length.
pub fn ground_descents_odd(p: &Path) -> bool {
    !p.is_empty()
        && p.inclines()
            .iter()
            .filter(|i| !i.is_ascent() && p.height(i.end()) == 0)
            .all(|i| i.len % 2 == 1)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Exhaustively checks the named bijection at size `n`.
pub fn verify_bijection(name: &str, n: usize) -> Result<BijectionReport> {
    let bound = BIJECTIONS
        .iter()
        .find(|(b, _)| *b == name)
        .map(|(_, b)| *b)
        .ok_or_else(|| Error::UnknownBijection(name.to_string()))?;
    if n > bound {
        return Err(Error::SizeOverBound {
            what: name.to_string(),
            size: n,
            bound,
        });
    }
    Ok(match name {
        "du_to_dxd" => check_du_to_dxd(n),
        "dxd_to_du_explicit" => check_explicit(n),
        "deutsch_involution" => check_deutsch(n),
        "reverse_path" => check_reverse(n),
        "levine_to_dyck" => check_levine(n),
        "gv_adjust" => check_gv(n),
        "gv_adjust_strict" => check_gv_strict(n),
        "cycle_rotate" => check_cycle(n),
        "df_to_schroder" => check_schroder(n),
        "marks_to_odd_ascents" => check_odd_ascents(n),
        "dimer_to_hill" => check_dimer(n),
        "finelike_to_fine" => check_finelike(n),
        _ => unreachable!("registered"),
    })
}

fn check_du_to_dxd(n: usize) -> BijectionReport {
    let mut c = Checker::new("du_to_dxd", n, &format!("dyck:{n}"), &format!("dyck:{n}"));
    let t_du = c.transport("du", "dxd");
    let t_even = c.transport("terminal descent even", "hill-free");
    let t_odd = c.transport("ground descents odd", "starts UD");
    let t_dd = c.transport("ends DD", "ends DD");
    let mut images = HashSet::new();
    for p in dyck_paths(n) {
        c.report.checked += 1;
        let q = du_to_dxd(&p).expect("dyck");
        c.round_trip(dxd_to_du(&q).ok() == Some(p), || format!("{p} -> {q}"));
        c.check(t_du, st(&p, StatKind::DU) == st(&q, StatKind::Dxd), || {
            format!("{p} -> {q}")
        });
        if n > 0 {
            let even = p.terminal_descent_len() % 2 == 0;
            c.check(t_even, even == !q.has_hill(), || format!("{p} -> {q}"));
            c.check(
                t_odd,
                ground_descents_odd(&p) == q.starts_with("UD"),
                || format!("{p} -> {q}"),
            );
            c.check(t_dd, p.ends_with("DD") == q.ends_with("DD"), || {
                format!("{p} -> {q}")
            });
        }
        images.insert(q);
    }
    c.finish(images.len(), dyck_paths(n).count())
}

fn check_explicit(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "dxd_to_du_explicit",
        n,
        &format!("dyck:{n}"),
        &format!("dyck:{n}"),
    );
    let t = c.transport("dxd", "du");
    let mut images = HashSet::new();
    for p in dyck_paths(n) {
        c.report.checked += 1;
        let q = dxd_to_du_explicit(&p);
        let r = dxd_to_du(&p).expect("dyck");
        c.round_trip(q.as_ref().ok() == Some(&r), || format!("{p}: {q:?} vs {r}"));
        if let Ok(q) = q {
            c.check(t, st(&p, StatKind::Dxd) == st(&q, StatKind::DU), || {
                format!("{p} -> {q}")
            });
            images.insert(q);
        }
    }
    c.finish(images.len(), dyck_paths(n).count())
}

fn check_deutsch(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "deutsch_involution",
        n,
        &format!("dyck:{n}"),
        &format!("dyck:{n}"),
    );
    let t_uu = c.transport("uu", "du");
    let t_du = c.transport("du", "uu");
    let t_fd = c.transport("first descent length", "1 + terminal UDs");
    let mut images = HashSet::new();
    for p in dyck_paths(n) {
        c.report.checked += 1;
        let q = deutsch_involution(&p).expect("dyck");
        c.round_trip(deutsch_involution(&q).ok() == Some(p), || {
            format!("{p} -> {q}")
        });
        c.check(t_uu, st(&p, StatKind::UU) == st(&q, StatKind::DU), || {
            format!("{p} -> {q}")
        });
        c.check(t_du, st(&p, StatKind::DU) == st(&q, StatKind::UU), || {
            format!("{p} -> {q}")
        });
        if n > 0 {
            c.check(t_fd, first_descent_len(&p) == 1 + terminal_uds(&q), || {
                format!("{p} -> {q}")
            });
        }
        images.insert(q);
    }
    c.finish(images.len(), dyck_paths(n).count())
}

fn check_reverse(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "reverse_path",
        n,
        &format!("dyck:{n}"),
        &format!("dyck:{n}"),
    );
    let t_asc = c.transport("ascent lengths", "descent lengths");
    let t_peaks = c.transport("peaks", "peaks");
    let mut images = HashSet::new();
    for p in dyck_paths(n) {
        c.report.checked += 1;
        let q = reverse_path(&p);
        c.round_trip(reverse_path(&q) == p && q.is_dyck(), || {
            format!("{p} -> {q}")
        });
        c.check(
            t_asc,
            sorted(p.ascent_lengths()) == sorted(q.descent_lengths()),
            || format!("{p} -> {q}"),
        );
        c.check(
            t_peaks,
            st(&p, StatKind::Peaks) == st(&q, StatKind::Peaks),
            || format!("{p} -> {q}"),
        );
        images.insert(q);
    }
    c.finish(images.len(), dyck_paths(n).count())
}

fn check_levine(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "levine_to_dyck",
        n,
        &format!("levine:r,s with r+s-1={n}"),
        &format!("dyck:{n}"),
    );
    let t_r = c.transport("r", "peaks");
    let t_end = c.transport("top ends N", "last ascent long");
    let mut images = HashSet::new();
    for r in 1..=n {
        for pair in levine_pairs(r, n + 1 - r) {
            c.report.checked += 1;
            let Ok(p) = levine_to_dyck(&pair) else {
                c.round_trip(false, || format!("{pair} has no image"));
                continue;
            };
            c.round_trip(dyck_to_levine(&p).ok().as_ref() == Some(&pair), || {
                format!("{pair} -> {p}")
            });
            c.check(t_r, st(&p, StatKind::Peaks) as usize == r, || {
                format!("{pair} -> {p}")
            });
            let top_n = pair.top.steps.last() == Some(&GridStep::N);
            let long = p.ascent_lengths().last().is_some_and(|&l| l >= 2);
            c.check(t_end, top_n == long, || format!("{pair} -> {p}"));
            images.insert(p);
        }
    }
    let expected = if n == 0 { 0 } else { dyck_paths(n).count() };
    c.finish(images.len(), expected)
}

fn check_gv(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "gv_adjust",
        n,
        &format!("gv-pair:{n},k"),
        &format!("dyck:{n}"),
    );
    let t_k = c.transport("k", "long_interior_inclines");
    let t_end = c.transport("class A / B", "ends DD / UD");
    let mut images = HashSet::new();
    for k in 0..=n.saturating_sub(2) {
        for raw in gv_pairs(GvVariant::LongInterior, n, k) {
            c.report.checked += 1;
            let adj = match gv_adjust(&raw, GvVariant::LongInterior) {
                Ok(a) => a,
                Err(e) => {
                    c.round_trip(false, || format!("{raw}: {e}"));
                    continue;
                }
            };
            c.round_trip(
                gv_unadjust(&adj, GvVariant::LongInterior).ok().as_ref() == Some(&raw),
                || format!("{raw} -> {}", adj.pair),
            );
            let p = match adj.class {
                GvClass::A => chain_a(&adj.pair),
                GvClass::B => chain_b(&adj.pair),
            };
            let Ok(p) = p else {
                c.round_trip(false, || format!("{} has no chain image", adj.pair));
                continue;
            };
            c.round_trip(chain_inverse(&p).ok().as_ref() == Some(&adj), || {
                format!("{} -> {p}", adj.pair)
            });
            c.check(
                t_k,
                st(&p, StatKind::LongInteriorInclines) as usize == k,
                || format!("{raw} -> {p}"),
            );
            let end_ok = match adj.class {
                GvClass::A => p.ends_with("DD"),
                GvClass::B => p.ends_with("UD"),
            };
            c.check(t_end, end_ok, || format!("{raw} -> {p}"));
            images.insert(p);
        }
    }
    let expected = if n < 2 { 0 } else { dyck_paths(n).count() };
    c.finish(images.len(), expected)
}

fn check_gv_strict(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "gv_adjust_strict",
        n,
        &format!("gv-pair-strict:{n},k"),
        &format!("dyck:{n}"),
    );
    let t_size = c.transport("n", "r + s - 1");
    let mut images = HashSet::new();
    for k in 0..n {
        for raw in gv_pairs(GvVariant::InteriorStrict, n, k) {
            c.report.checked += 1;
            let adj = match gv_adjust(&raw, GvVariant::InteriorStrict) {
                Ok(a) => a,
                Err(e) => {
                    c.round_trip(false, || format!("{raw}: {e}"));
                    continue;
                }
            };
            c.round_trip(
                gv_unadjust(&adj, GvVariant::InteriorStrict).ok().as_ref() == Some(&raw),
                || format!("{raw} -> {}", adj.pair),
            );
            let size_ok = adj.pair.levine_params().is_ok_and(|(r, s)| r + s - 1 == n);
            c.check(t_size, size_ok, || format!("{raw} -> {}", adj.pair));
            if let Ok(p) = levine_to_dyck(&adj.pair) {
                images.insert(p);
            }
        }
    }
    let expected = if n == 0 { 0 } else { dyck_paths(n).count() };
    c.finish(images.len(), expected)
}

fn check_cycle(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "cycle_rotate",
        n,
        &format!("inverted-dyck:{n} x 1..={n}"),
        &format!("balanced:{n}"),
    );
    let t_x = c.transport("class index", "x_upsteps_above_ground");
    let t_asc = c.transport("ascent lengths", "ascent lengths");
    let mut images = HashSet::new();
    for p in inverted_dyck_paths(n) {
        images.insert(p);
        let asc = sorted(p.ascent_lengths());
        for i in 1..=n {
            c.report.checked += 1;
            let q = cycle_rotate(&p, i).expect("in range");
            c.round_trip(cycle_unrotate(&q).ok() == Some((p, i)), || {
                format!("{p} (i={i}) -> {q}")
            });
            c.check(t_x, x_statistic(&q) == i, || format!("{p} (i={i}) -> {q}"));
            c.check(t_asc, sorted(q.ascent_lengths()) == asc, || {
                format!("{p} (i={i}) -> {q}")
            });
            images.insert(q);
        }
    }
    c.finish(images.len(), balanced_paths(n).count())
}

fn check_schroder(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "df_to_schroder",
        n,
        &format!("marked-df-dyck:{n},k"),
        &format!("schroder:{n}"),
    );
    let t_f = c.transport("marks", "flats");
    let t_g = c.transport("mark at vertex 0", "ground-level flat");
    let mut images = HashSet::new();
    for k in 0..=n {
        for m in marked_paths(n, k, MarkKind::Df, WalkClass::Dyck) {
            c.report.checked += 1;
            let s = df_to_schroder(&m).expect("valid DF path");
            c.round_trip(schroder_to_df(&s).ok().as_ref() == Some(&m), || {
                format!("{m} -> {s}")
            });
            c.check(t_f, s.flats() == k, || format!("{m} -> {s}"));
            c.check(t_g, m.is_marked(0) == s.has_ground_flat(), || {
                format!("{m} -> {s}")
            });
            images.insert(s);
        }
    }
    for s in schroder_paths(n) {
        let back = schroder_to_df(&s).and_then(|m| df_to_schroder(&m));
        c.round_trip(back.as_ref().ok() == Some(&s), || {
            format!("{s} -> {back:?}")
        });
    }
    c.finish(images.len(), schroder_paths(n).len())
}

fn check_odd_ascents(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "marks_to_odd_ascents",
        n,
        &format!("marked-df-parity:{n},k"),
        &format!("balanced:{n}"),
    );
    let t = c.transport("marks", "odd_ascents");
    let mut images = HashSet::new();
    for k in 0..=n / 2 {
        for m in marked_df_parity(n, k) {
            c.report.checked += 1;
            let q = match marks_to_odd_ascents(&m) {
                Ok(q) => q,
                Err(e) => {
                    c.round_trip(false, || format!("{m}: {e}"));
                    continue;
                }
            };
            c.round_trip(odd_ascents_to_marks(&q).ok().as_ref() == Some(&m), || {
                format!("{m} -> {q}")
            });
            c.check(
                t,
                st(&q, StatKind::OddAscents) as usize == n - 2 * k,
                || format!("{m} -> {q}"),
            );
            images.insert(q);
        }
    }
    for q in balanced_paths(n) {
        let back = odd_ascents_to_marks(&q).and_then(|m| marks_to_odd_ascents(&m));
        c.round_trip(back.as_ref().ok() == Some(&q), || {
            format!("{q} -> {back:?}")
        });
    }
    c.finish(images.len(), balanced_paths(n).count())
}

fn check_dimer(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "dimer_to_hill",
        n,
        &format!("dyck:{n}"),
        &format!("dyck:{n}"),
    );
    let t = c.transport("max_dimers", "hill_producing_upsteps");
    let t_f = c.transport("fine", "fine");
    let mut images = HashSet::new();
    for p in dyck_paths(n) {
        c.report.checked += 1;
        let q = dimer_to_hill(&p).expect("dyck");
        c.round_trip(hill_to_dimer(&q).ok() == Some(p), || format!("{p} -> {q}"));
        c.check(
            t,
            st(&p, StatKind::MaxDimers) == st(&q, StatKind::HillProducingUpsteps),
            || format!("{p} -> {q}"),
        );
        c.check(t_f, p.is_fine() == q.is_fine(), || format!("{p} -> {q}"));
        images.insert(q);
    }
    c.finish(images.len(), dyck_paths(n).count())
}

fn check_finelike(n: usize) -> BijectionReport {
    let mut c = Checker::new(
        "finelike_to_fine",
        n,
        &format!("finelike-dyck:{n},j,k"),
        &format!("fine dyck:{n}"),
    );
    let t_j = c.transport("marks", "short_ascents");
    let t_k = c.transport("long ascents", "long_ascents");
    let mut images = HashSet::new();
    for k in 0..=n / 2 {
        for j in 0..=n.saturating_sub(2 * k) {
            for m in finelike_paths(n, j, k, WalkClass::Dyck) {
                c.report.checked += 1;
                let q = match finelike_to_fine(&m) {
                    Ok(q) => q,
                    Err(e) => {
                        c.round_trip(false, || format!("{m}: {e}"));
                        continue;
                    }
                };
                c.round_trip(fine_to_finelike(&q).ok().as_ref() == Some(&m), || {
                    format!("{m} -> {q}")
                });
                c.check(t_j, st(&q, StatKind::ShortAscents) as usize == j, || {
                    format!("{m} -> {q}")
                });
                c.check(t_k, st(&q, StatKind::LongAscents) as usize == k, || {
                    format!("{m} -> {q}")
                });
                images.insert(q);
            }
        }
    }
    let fine: Vec<Path> = dyck_paths(n).filter(|p| p.is_fine()).collect();
    for q in &fine {
        let back = fine_to_finelike(q).and_then(|m| finelike_to_fine(&m));
        c.round_trip(back.as_ref().ok() == Some(q), || format!("{q} -> {back:?}"));
    }
    c.finish(images.len(), fine.len())
}
