//! Runs every identity at its size cap and every bijection at size 8.

use dyck_bijections::bijections::{verify_bijection, BIJECTIONS};
use dyck_bijections::identities::{verify, IdentityKind};

fn main() -> dyck_bijections::Result<()> {
    for kind in IdentityKind::ALL {
        let r = verify(kind, kind.cap().min(10))?;
        println!(
            "{:<16} n={}..={} {}",
            kind.name(),
            r.n_min,
            r.n_max,
            r.verdict
        );
    }
    for &(name, bound) in BIJECTIONS {
        let r = verify_bijection(name, bound.min(8))?;
        println!(
            "{name:<22} {} objects {}",
            r.checked,
            if r.ok() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
