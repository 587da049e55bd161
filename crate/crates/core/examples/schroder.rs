//! DF-marked Dyck paths and Schröder paths.

use dyck_bijections::bijections::{df_to_schroder, schroder_to_df};
use dyck_bijections::enumerate::schroder_paths;
use dyck_bijections::marked::{MarkKind, MarkedPath};
use dyck_bijections::render::{ascii_marked, ascii_schroder};

fn main() -> dyck_bijections::Result<()> {
    let m = MarkedPath::from_text("UUUDDDUUDUUUDDDD 0,1,11", MarkKind::Df)?;
    let s = df_to_schroder(&m)?;
    println!("{m}\n{}\n", ascii_marked(&m));
    println!("{s}\n{}\n", ascii_schroder(&s));
    assert_eq!(schroder_to_df(&s)?, m);

    for n in 1..=6 {
        let all = schroder_paths(n);
        let ground = all.iter().filter(|s| s.has_ground_flat()).count();
        println!(
            "n={n}: {} paths, {ground} with a flat at ground level",
            all.len()
        );
    }
    Ok(())
}
