//! Exact combinatorics of Dyck, Fine and Schröder paths.

pub mod bijections;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod identities;
pub mod marked;
pub mod path;
pub mod render;
pub mod schroder;
pub mod stats;
pub mod tree;

pub use error::{Error, Result};
pub use path::{Path, PathClass, Step};
