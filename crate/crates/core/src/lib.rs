//! Power graphs of finite groups and the exact number of their spanning trees.

pub mod bits;
pub mod classify;
pub mod closedform;
pub mod error;
pub mod factor;
pub mod groups;
pub mod numtheory;
pub mod powergraph;
pub mod treecount;

pub use error::{Error, Result};
pub use factor::Factorization;
pub use groups::{FiniteGroup, GroupSpec};

pub use powergraph::PowerGraph;
pub use treecount::{MultiGraph, TreeNumber};
