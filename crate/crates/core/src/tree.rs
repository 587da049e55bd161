//! Ordered (plane) rooted trees and the accordion correspondence with Dyck
//! paths: each edge opens out into an upstep and its matching downstep.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{Path, Step};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> OrderedTree {
        OrderedTree::default()
    }

    pub fn with_children(children: Vec<OrderedTree>) -> OrderedTree {
        OrderedTree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }

    pub fn from_dyck(p: &Path) -> Result<OrderedTree> {
        p.check_dyck()?;
        let mut stack: Vec<OrderedTree> = vec![OrderedTree::leaf()];
        for s in p.steps() {
            match s {
                Step::U => stack.push(OrderedTree::leaf()),
                Step::D => {
                    let child = stack.pop().expect("dyck path keeps the root on the stack");
                    stack
                        .last_mut()
                        .expect("dyck path never closes the root")
                        .children
                        .push(child);
                }
            }
        }
        Ok(stack.pop().expect("root"))
    }

    pub fn to_dyck(&self) -> Path {
        let mut steps = Vec::with_capacity(2 * self.edges());
        // (node, next child index)
        let mut stack: Vec<(&OrderedTree, usize)> = vec![(self, 0)];
        while let Some((node, i)) = stack.pop() {
            if i < node.children.len() {
                stack.push((node, i + 1));
                steps.push(Step::U);
                stack.push((&node.children[i], 0));
            } else if !stack.is_empty() {
                steps.push(Step::D);
            }
        }
        Path::from_steps(&steps).expect("tree too large for a packed path")
    }

    /// Non-root, non-leaf vertices with at least one leaf child.
    pub fn nodes_adjacent_to_leaf(&self) -> usize {
        let mut count = 0;
        let mut stack: Vec<&OrderedTree> = self.children.iter().collect();
        while let Some(t) = stack.pop() {
            if t.children.iter().any(|c| c.is_leaf()) {
                count += 1;
            }
            stack.extend(t.children.iter());
        }
        count
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeStat {
    NodesAdjLeaf,
}

pub fn tree_statistic(t: &OrderedTree, kind: TreeStat) -> u64 {
    match kind {
        TreeStat::NodesAdjLeaf => t.nodes_adjacent_to_leaf() as u64,
    }
}

/// Bracket notation: each vertex is `(` children `)`.
impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<OrderedTree> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(Error::Parse {
                ch: s.chars().next().unwrap_or(' '),
                index: 0,
            })?;
        let mut text = String::with_capacity(inner.len());
        for (i, ch) in inner.chars().enumerate() {
            text.push(match ch {
                '(' => 'U',
                ')' => 'D',
                _ => return Err(Error::Parse { ch, index: i + 1 }),
            });
        }
        OrderedTree::from_dyck(&Path::parse(&text)?)
    }
}
