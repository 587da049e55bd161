//! Dyck paths by long interior inclines: formula against enumeration.

use dyck_bijections::enumerate::FamilySpec;
use dyck_bijections::identities::{distribution, formula_row, IdentityKind, Statistic};
use dyck_bijections::stats::StatKind;

fn main() -> dyck_bijections::Result<()> {
    let stat = Statistic::Path(StatKind::LongInteriorInclines);
    println!("n   counts by k");
    for n in 1..=9 {
        let d = distribution(FamilySpec::Dyck(n), stat)?;
        let f = formula_row(IdentityKind::LongInterior, n)?;
        let mark = if d.counts == f { "" } else { "  MISMATCH" };
        println!("{n:<3} {:?}{mark}", d.counts);
    }
    Ok(())
}
