use std::fmt;
use std::str::FromStr;

use crate::enumerate::{enumerate, FamilySpec, Object};
use crate::error::{Error, Result};
use crate::stats::{statistic, StatKind};
use crate::tree::{tree_statistic, OrderedTree, TreeStat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Path(StatKind),
    Tree(TreeStat),
    /// Flat steps of a Schröder path.
    Flats,
    /// Marked vertices of a marked path.
    Marks,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Path(k) => write!(f, "{k}"),
            Statistic::Tree(TreeStat::NodesAdjLeaf) => f.write_str("nodes_adj_leaf"),
            Statistic::Flats => f.write_str("flats"),
            Statistic::Marks => f.write_str("marks"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statistic> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "nodes_adj_leaf" => Ok(Statistic::Tree(TreeStat::NodesAdjLeaf)),
            "flats" => Ok(Statistic::Flats),
            "marks" => Ok(Statistic::Marks),
            _ => s.parse().map(Statistic::Path),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub n: usize,
    pub statistic: Statistic,
    /// Indexed by statistic value, trailing zeros trimmed.
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Distribution {
    pub fn new(n: usize, statistic: Statistic) -> Distribution {
        Distribution {
            n,
            statistic,
            counts: Vec::new(),
            total: 0,
        }
    }

    pub fn add(&mut self, value: usize) {
        if self.counts.len() <= value {
            self.counts.resize(value + 1, 0);
        }
        self.counts[value] += 1;
        self.total += 1;
    }

    /// Vector sum, for merging shards.
    pub fn merge(&mut self, other: &Distribution) {
        if self.counts.len() < other.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.total += other.total;
        super::trim(&mut self.counts);
    }
}

fn mismatch(stat: Statistic, obj: &Object) -> Error {
    Error::Constraint(format!("statistic {stat} is undefined on {obj}"))
}

pub(crate) fn evaluate(obj: &Object, stat: Statistic) -> Result<usize> {
    let v = match (obj, stat) {
        (Object::Path(p), Statistic::Path(k)) => statistic(p, k)?,
        (Object::Marked(m), Statistic::Path(k)) => statistic(&m.path, k)?,
        (Object::Tree(t), Statistic::Tree(k)) => tree_statistic(t, k),
        (Object::Tree(t), Statistic::Path(k)) => statistic(&t.to_dyck(), k)?,
        (Object::Path(p), Statistic::Tree(k)) if p.is_dyck() => {
            tree_statistic(&OrderedTree::from_dyck(p)?, k)
        }
        (Object::Schroder(s), Statistic::Flats) => s.flats() as u64,
        (Object::Marked(m), Statistic::Marks) => m.marks.len() as u64,
        _ => return Err(mismatch(stat, obj)),
    };
    Ok(v as usize)
}

/// Exact distribution of `stat` over `family`, by full enumeration.
pub fn distribution(family: FamilySpec, stat: Statistic) -> Result<Distribution> {
    let bound = family.desk_bound();
    if family.size() > bound {
        return Err(Error::SizeOverBound {
            what: family.to_string(),
            size: family.size(),
            bound,
        });
    }
    let mut d = Distribution::new(family.size(), stat);
    for obj in enumerate(family) {
        d.add(evaluate(&obj, stat)?);
    }
    super::trim(&mut d.counts);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let d = distribution(
            FamilySpec::Dyck(7),
            Statistic::Path(StatKind::LongInteriorInclines),
        )
        .unwrap();
        assert_eq!(d.counts, vec![7, 70, 175, 140, 35, 2]);
        assert_eq!(d.total, 429);
        let t = distribution(
            FamilySpec::Trees(6),
            Statistic::Tree(TreeStat::NodesAdjLeaf),
        )
        .unwrap();
        assert_eq!(t.counts, vec![1, 35, 84, 12]);
    }

    #[test]
    fn single_path() {
        for s in [StatKind::Peaks, StatKind::Dxd, StatKind::X1PlusX2] {
            let d = distribution(FamilySpec::Dyck(1), Statistic::Path(s)).unwrap();
            assert_eq!(d.total, 1);
        }
    }

    #[test]
    fn mismatch_and_bound() {
        assert!(distribution(FamilySpec::Schroder(2), Statistic::Path(StatKind::Peaks)).is_err());
        assert!(distribution(
            FamilySpec::Balanced(3),
            Statistic::Path(StatKind::HillProducingUpsteps)
        )
        .is_err());
        assert!(matches!(
            distribution(FamilySpec::Dyck(30), Statistic::Path(StatKind::Peaks)),
            Err(Error::SizeOverBound { .. })
        ));
    }

    #[test]
    fn merge_is_vector_addition() {
        let mut a = Distribution::new(3, Statistic::Flats);
        a.add(0);
        let mut b = Distribution::new(3, Statistic::Flats);
        b.add(2);
        b.add(2);
        a.merge(&b);
        assert_eq!(a.counts, vec![1, 0, 2]);
        assert_eq!(a.total, 3);
    }
}
