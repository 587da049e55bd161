//! ASCII and SVG drawings of a path, a tree and a Levine pair.

use dyck_bijections::bijections::dyck_to_levine;
use dyck_bijections::render::{ascii_pair, ascii_path, ascii_tree, svg_path};
use dyck_bijections::tree::OrderedTree;
use dyck_bijections::Path;

fn main() -> dyck_bijections::Result<()> {
    let p = Path::parse("UUDUUDDDUD")?;
    println!("{}\n", ascii_path(&p));
    println!("{}", ascii_tree(&OrderedTree::from_dyck(&p)?));
    println!("{}\n", ascii_pair(&dyck_to_levine(&p)?));
    println!("{}", svg_path(&p, &[]));
    Ok(())
}
