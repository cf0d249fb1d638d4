//! Parameter DPs over tree decompositions.
//!
//! Bag subsets are bitmasks over positions in the sorted bag; masks are
//! re-indexed at introduce and forget nodes.

mod alpha;
mod coloring;
mod omega;

pub use alpha::{alpha_bag_tables, alpha_tw, AlphaBagTable};
pub use coloring::{chi_tw, theta_tw};
pub use omega::omega_tw;

use crate::error::{Error, Result};
use crate::graph::{Graph, ParamReport, Vertex};
use crate::td::{make_nice, validate_td, NiceNode, NiceTreeDecomposition, TreeDecomposition};

/// Largest bag the subset table for `alpha` accepts.
pub const ALPHA_MAX_BAG: usize = 24;
/// Largest bag the clique enumeration for `omega` accepts.
pub const OMEGA_MAX_BAG: usize = 20;
/// Largest bag the partition DPs for `chi` and `theta` accept.
pub const PARTITION_MAX_BAG: usize = 12;

/// All four parameters from a plain decomposition, made nice first.
pub fn tw_params(g: &Graph, td: &TreeDecomposition) -> Result<ParamReport> {
    let ntd = make_nice(td, g)?;
    Ok(ParamReport::new(
        alpha_tw(g, &ntd)?,
        omega_tw(g, td)?,
        chi_tw(g, &ntd)?,
        theta_tw(g, &ntd)?,
    ))
}

fn check_nice(g: &Graph, ntd: &NiceTreeDecomposition, max_bag: usize, what: &'static str) -> Result<()> {
    if ntd.vertex_count() != g.vertex_count() {
        return Err(Error::input(format!(
            "decomposition has {} vertices, graph has {}",
            ntd.vertex_count(),
            g.vertex_count()
        )));
    }
    let broken = ntd.check_conditions();
    if !broken.is_empty() {
        return Err(Error::input(format!("not a nice decomposition: {}", broken.join("; "))));
    }
    let violations = validate_td(&ntd.to_tree_decomposition(), g);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    guard_bag(ntd.width() + 1, max_bag, what)
}

fn guard_bag(size: usize, limit: usize, what: &'static str) -> Result<()> {
    if size > limit {
        return Err(Error::Guard {
            what,
            actual: size,
            limit,
        });
    }
    Ok(())
}

/// Runs `step` over the nodes children-first, handing it the children's
/// results, and returns the root's result.
fn fold_nice<T>(
    ntd: &NiceTreeDecomposition,
    mut step: impl FnMut(&NiceNode, Vec<T>) -> T,
) -> T {
    let mut results: Vec<Option<T>> = Vec::with_capacity(ntd.node_count());
    for node in ntd.nodes() {
        let children = node
            .children
            .iter()
            .map(|&c| results[c].take().expect("each child has one parent"))
            .collect();
        results.push(Some(step(node, children)));
    }
    results.pop().flatten().expect("root result")
}

fn position(bag: &[Vertex], v: Vertex) -> usize {
    bag.binary_search(&v).expect("vertex is in the bag")
}

/// Positions in `bag` of the neighbors of `v`.
fn neighbor_mask(g: &Graph, bag: &[Vertex], v: Vertex) -> u32 {
    bag.iter()
        .enumerate()
        .filter(|&(_, &w)| g.adjacent(v, w))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Opens a zero bit at position `p`.
fn insert_bit(mask: u32, p: usize) -> u32 {
    let low = mask & ((1 << p) - 1);
    ((mask >> p) << (p + 1)) | low
}

/// Drops position `p`, whatever its bit.
fn remove_bit(mask: u32, p: usize) -> u32 {
    let low = mask & ((1 << p) - 1);
    ((mask >> (p + 1)) << p) | low
}
