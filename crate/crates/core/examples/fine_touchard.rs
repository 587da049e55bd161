//! Fine paths by long noninitial ascents, and the mark-moving map from
//! Fine-like paths.

use dyck_bijections::bijections::{fine_to_finelike, finelike_to_fine};
use dyck_bijections::identities::{fine_number, formula_row, IdentityKind};
use dyck_bijections::marked::{MarkKind, MarkedPath};

fn main() -> dyck_bijections::Result<()> {
    let m = MarkedPath::from_text("UUUUUDDDUUDDUUUDDDDDUUDD 2,3,4", MarkKind::Ia)?;
    let q = finelike_to_fine(&m)?;
    println!("{m}\n  -> {q}");
    assert_eq!(fine_to_finelike(&q)?, m);

    for n in 1..=10 {
        println!(
            "F_{n} = {:<5} {:?}",
            fine_number(n)?,
            formula_row(IdentityKind::FineTouchard, n)?
        );
    }
    Ok(())
}
