//! Linear-time parameters for trees and co-graphs.

mod cotree;
mod tree;

pub use cotree::{cotree_params, parse_cotree, CoTree};
pub use tree::{tree_params, RootedTree};
