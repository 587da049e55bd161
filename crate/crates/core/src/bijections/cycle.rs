//! Chung–Feller style rotation: inverted Dyck paths onto each class of
//! balanced paths with a fixed number of upsteps above ground.

use crate::error::{Error, Result};
use crate::marked::MarkedPath;
use crate::path::Path;
use crate::stats::x_statistic;

/// Upsteps of `p` in rotation order: top-vertex height descending, then
/// right to left, so the final upstep is number 1.
pub fn upstep_order(p: &Path) -> Vec<usize> {
    let mut ups: Vec<usize> = (0..p.len()).filter(|&i| p.is_up(i)).collect();
    ups.sort_by(|&a, &b| p.height(b + 1).cmp(&p.height(a + 1)).then(b.cmp(&a)));
    ups
}

/// `P D Q ↦ Q D P`; returns the image and where old step `j` lands.
fn rotate_at(p: &Path, d: usize) -> (Path, impl Fn(usize) -> usize) {
    let len = p.len();
    let img = Path::concat(&[p.slice(d + 1, len), p.slice(d, d + 1), p.slice(0, d)]);
    let map = move |j: usize| {
        if j > d {
            j - d - 1
        } else if j == d {
            len - d - 1
        } else {
            j + len - d
        }
    };
    (img, map)
}

fn cut_for(p: &Path, i: usize) -> Result<usize> {
    p.check_inverted_dyck()?;
    let n = p.size();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let u = upstep_order(p)[i - 1];
    let b = p.height(u + 1);
    (0..u)
        .rev()
        .find(|&j| !p.is_up(j) && p.height(j) == b)
        .ok_or(Error::NoMatchingVertex { vertex: u })
}

/// Rotates an inverted Dyck path into the class with `i` upsteps at or
/// above ground.
pub fn cycle_rotate(p: &Path, i: usize) -> Result<Path> {
    let d = cut_for(p, i)?;
    Ok(rotate_at(p, d).0)
}

fn uncut(q: &Path) -> Result<usize> {
    q.check_balanced()?;
    if x_statistic(q) == 0 {
        return Err(Error::Constraint(format!(
            "{q} is already an inverted Dyck path"
        )));
    }
    let m = q.max_height();
    Ok((0..q.len())
        .rev()
        .find(|&j| !q.is_up(j) && q.height(j) == m)
        .expect("a downstep leaves the maximum"))
}

/// Inverse of [`cycle_rotate`]: the inverted Dyck preimage and the class
/// index.
pub fn cycle_unrotate(q: &Path) -> Result<(Path, usize)> {
    let d = uncut(q)?;
    let len = q.len();
    let p = Path::concat(&[q.slice(d + 1, len), q.slice(d, d + 1), q.slice(0, d)]);
    Ok((p, x_statistic(q)))
}

fn remark(m: &MarkedPath, img: Path, map: impl Fn(usize) -> usize) -> MarkedPath {
    // a mark at v rides on the upstep that starts at v
    let mut marks: Vec<usize> = m.marks.iter().map(|&v| map(v)).collect();
    marks.sort_unstable();
    MarkedPath {
        path: img,
        marks,
        kind: m.kind,
    }
}

pub fn cycle_rotate_marked(m: &MarkedPath, i: usize) -> Result<MarkedPath> {
    let d = cut_for(&m.path, i)?;
    let (img, map) = rotate_at(&m.path, d);
    Ok(remark(m, img, map))
}

pub fn cycle_unrotate_marked(m: &MarkedPath) -> Result<(MarkedPath, usize)> {
    let d = uncut(&m.path)?;
    let (img, map) = rotate_at(&m.path, d);
    Ok((remark(m, img, map), x_statistic(&m.path)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{balanced_paths, inverted_dyck_paths, marked_paths, WalkClass};
    use crate::marked::MarkKind;
    use std::collections::HashSet;

    fn b(s: &str) -> Path {
        Path::parse_balanced(s).unwrap()
    }

    #[test]
    fn size_two() {
        assert_eq!(cycle_rotate(&b("DUDU"), 1).unwrap(), b("UDDU"));
        assert_eq!(cycle_rotate(&b("DDUU"), 1).unwrap(), b("DUUD"));
        assert_eq!(cycle_rotate(&b("DUDU"), 2).unwrap(), b("UDUD"));
        assert_eq!(cycle_rotate(&b("DDUU"), 2).unwrap(), b("UUDD"));
        assert!(cycle_rotate(&b("DDUU"), 3).is_err());
        assert!(cycle_rotate(&b("DDUU"), 0).is_err());
        assert!(cycle_rotate(&b("UUDD"), 1).is_err());
    }

    #[test]
    fn classes_partition_balanced() {
        for n in 1..=7 {
            let mut seen = HashSet::new();
            for p in inverted_dyck_paths(n) {
                let mut asc = p.ascent_lengths();
                asc.sort_unstable();
                for i in 1..=n {
                    let q = cycle_rotate(&p, i).unwrap();
                    assert_eq!(x_statistic(&q), i);
                    let mut qa = q.ascent_lengths();
                    qa.sort_unstable();
                    assert_eq!(qa, asc);
                    assert_eq!(cycle_unrotate(&q).unwrap(), (p, i));
                    assert!(seen.insert(q));
                }
                seen.insert(p);
            }
            assert_eq!(seen.len(), balanced_paths(n).count());
        }
    }

    #[test]
    fn marked_rotation_keeps_marks_interior() {
        for m in marked_paths(5, 2, MarkKind::Ia, WalkClass::InvertedDyck) {
            for i in 1..=5 {
                let r = cycle_rotate_marked(&m, i).unwrap();
                assert!(MarkedPath::new(r.path, r.marks.clone(), MarkKind::Ia).is_ok());
                assert_eq!(cycle_unrotate_marked(&r).unwrap(), (m.clone(), i));
            }
        }
        let m = MarkedPath::unmarked(b("DDUU"), MarkKind::Ia);
        assert_eq!(cycle_rotate_marked(&m, 2).unwrap().path, b("UUDD"));
    }
}
