//! One strict path from each case of the dimer-to-hill classification.

use dyck_bijections::bijections::dimer::{classify, classify_image};
use dyck_bijections::bijections::{dimer_to_hill, hill_to_dimer};
use dyck_bijections::stats::{statistic, StatKind};
use dyck_bijections::Path;

fn main() -> dyck_bijections::Result<()> {
    for text in [
        "UUUUDDDD",
        "UUDD",
        "UUUUDDDUDD",
        "UUUUDDUDDUDD",
        "UUUDUDDD",
        "UUUDDUDD",
    ] {
        let p = Path::parse(text)?;
        let q = dimer_to_hill(&p)?;
        println!(
            "{p:<12} {:?} -> {q:<12} {:?}  dimers {} = hill-producing {}",
            classify(&p),
            classify_image(&q),
            statistic(&p, StatKind::MaxDimers)?,
            statistic(&q, StatKind::HillProducingUpsteps)?,
        );
        assert_eq!(hill_to_dimer(&q)?, p);
    }
    Ok(())
}
