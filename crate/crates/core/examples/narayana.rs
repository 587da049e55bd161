//! Three statistics with the Narayana distribution.

use dyck_bijections::enumerate::FamilySpec;
use dyck_bijections::identities::{distribution, verify, IdentityKind, Statistic};
use dyck_bijections::stats::StatKind;

fn main() -> dyck_bijections::Result<()> {
    let n = 6;
    for k in [
        StatKind::Valleys,
        StatKind::Dxd,
        StatKind::LongNonterminalInclines,
    ] {
        let d = distribution(FamilySpec::Dyck(n), Statistic::Path(k))?;
        println!("{k:<28} {:?}", d.counts);
    }
    let report = verify(IdentityKind::Narayana, 8)?;
    for note in &report.notes {
        println!("note: {note}");
    }
    Ok(())
}
