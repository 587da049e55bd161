use thiserror::Error;

use crate::stats::StatKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at position {index}")]
    Parse { ch: char, index: usize },
    #[error("path has {len} steps; at most {max} are supported")]
    TooLong { len: usize, max: usize },
    #[error("path is not balanced: first violation at index {index}")]
    Unbalanced { index: usize },
    #[error("path is not a Dyck path: drops below ground at step {index}")]
    NotDyck { index: usize },
    #[error("path is not an inverted Dyck path: rises above ground at step {index}")]
    NotInvertedDyck { index: usize },
    #[error("statistic {stat} is undefined on {class} paths")]
    StatUndefined { stat: StatKind, class: &'static str },
    #[error("operation requires a nonempty path")]
    EmptyPath,
    #[error("step {index} is not an upstep")]
    NotUpstep { index: usize },
    #[error("no matching vertex for vertex {vertex}")]
    NoMatchingVertex { vertex: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid marks: {0}")]
    InvalidMarks(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("lattice paths intersect at ({x}, {y})")]
    Intersecting { x: i32, y: i32 },
    #[error("malformed lattice path pair: {0}")]
    MalformedPair(String),
    #[error("malformed Schröder path: {0}")]
    MalformedSchroder(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown bijection {0:?}")]
    UnknownBijection(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("unknown render style {0:?}")]
    UnknownStyle(String),
    #[error("size {size} exceeds the bound {bound} for {what}")]
    SizeOverBound {
        what: String,
        size: usize,
        bound: usize,
    },
    #[error("inexact division {num} / {den} in formula {formula}")]
    InexactDivision {
        formula: &'static str,
        num: i128,
        den: i128,
    },
    #[error("arithmetic overflow in formula {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
