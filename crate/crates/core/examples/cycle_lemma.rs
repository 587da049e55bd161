//! Balanced paths split evenly by upsteps at or above ground; rotation
//! walks one inverted Dyck path through every class.

use dyck_bijections::bijections::{cycle_rotate, cycle_unrotate};
use dyck_bijections::enumerate::balanced_paths;
use dyck_bijections::render::ascii_path;
use dyck_bijections::stats::x_statistic;
use dyck_bijections::Path;

fn main() -> dyck_bijections::Result<()> {
    let n = 4;
    let mut classes = vec![0; n + 1];
    for p in balanced_paths(n) {
        classes[x_statistic(&p)] += 1;
    }
    println!("class sizes for n={n}: {classes:?}");

    let p = Path::parse("DDUDDUUU")?;
    for i in 1..=n {
        let q = cycle_rotate(&p, i)?;
        let (back, j) = cycle_unrotate(&q)?;
        assert_eq!((back, j), (p, i));
        println!("i={i}: {q}\n{}\n", ascii_path(&q));
    }
    Ok(())
}
