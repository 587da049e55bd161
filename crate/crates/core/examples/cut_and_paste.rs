//! The explicit DXD-to-DU map with its red and blue steps.

use dyck_bijections::bijections::{du_to_dxd, dxd_to_du, dxd_to_du_traced};
use dyck_bijections::Path;

fn main() -> dyck_bijections::Result<()> {
    let p = Path::parse("UUUDDDUUUDUDDDUD")?;
    let trace = dxd_to_du_traced(&p, None)?;
    for line in trace.lines() {
        println!("{line}");
    }
    assert_eq!(trace.output, dxd_to_du(&p)?);
    assert_eq!(du_to_dxd(&trace.output)?, p);
    Ok(())
}
