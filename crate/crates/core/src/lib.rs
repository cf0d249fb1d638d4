//! Independence number, clique number, chromatic number and clique covering
//! number by dynamic programming over tree decompositions and over
//! clique-width and NLC-width expressions, with linear-time routines for
//! trees and co-graphs and an exhaustive oracle for small graphs.

pub mod cli;
pub mod cliquewidth;
pub mod error;
pub mod expr;
pub mod graph;
pub mod oracle;
pub mod special;
pub mod td;
pub mod treewidth;

pub use error::{Error, Result};
