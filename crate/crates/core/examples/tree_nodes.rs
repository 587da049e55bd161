//! Ordered trees by nodes adjacent to a leaf, and the transport that
//! explains the count.

use dyck_bijections::enumerate::trees;
use dyck_bijections::identities::{verify, IdentityKind};

fn main() -> dyck_bijections::Result<()> {
    for t in trees(3) {
        println!("{t:<10} {} -> {}", t.to_dyck(), t.nodes_adjacent_to_leaf());
    }
    println!();
    let report = verify(IdentityKind::TreeNodes, 8)?;
    print!("{report}");
    Ok(())
}
