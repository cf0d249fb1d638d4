//! Chromatic number and clique covering number over bag partitions.
//!
//! A state partitions the bag into blocks, each the trace of one color class
//! (resp. one clique) of the subtree's graph.
//!
//! For `chi` the state carries `m`, the number of colors used so far. A color
//! whose class no longer meets the bag may be given to a new vertex, since a
//! newly introduced vertex has no neighbors among forgotten vertices. So a new
//! block needs only `max(m, blocks + 1)` colors, and the two sides of a join
//! share their retired colors.
//!
//! For `theta` each block carries a flag `h` set once a member has been
//! forgotten. Such a block can neither grow at an introduce node nor meet
//! another flagged block at a join, as either would need an edge to a
//! forgotten vertex. `t` counts cliques that have left the bag entirely.

use std::collections::HashMap;

use super::{check_nice, fold_nice, insert_bit, neighbor_mask, position, remove_bit, PARTITION_MAX_BAG};
use crate::error::Result;
use crate::graph::Graph;
use crate::td::{NiceNode, NiceTreeDecomposition, NodeKind};

/// Sorted block masks.
type Blocks = Vec<u32>;

fn keep_min<K: std::hash::Hash + Eq>(table: &mut HashMap<K, usize>, key: K, value: usize) {
    table
        .entry(key)
        .and_modify(|v| *v = (*v).min(value))
        .or_insert(value);
}

/// Chromatic number.
pub fn chi_tw(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<usize> {
    check_nice(g, ntd, PARTITION_MAX_BAG, "bag size for the coloring partitions")?;
    let root = fold_nice(ntd, |node: &NiceNode, mut children: Vec<HashMap<Blocks, usize>>| {
        let bag = &node.bag;
        let mut out: HashMap<Blocks, usize> = HashMap::new();
        match node.kind {
            NodeKind::Leaf => {
                out.insert(vec![1], 1);
            }
            NodeKind::Introduce(v) => {
                let p = position(bag, v);
                let adj = neighbor_mask(g, bag, v);
                for (blocks, m) in children.pop().expect("one child") {
                    let blocks: Blocks = blocks.iter().map(|&b| insert_bit(b, p)).collect();
                    for (i, &b) in blocks.iter().enumerate() {
                        if b & adj == 0 {
                            let mut next = blocks.clone();
                            next[i] |= 1 << p;
                            next.sort_unstable();
                            keep_min(&mut out, next, m);
                        }
                    }
                    let opened = m.max(blocks.len() + 1);
                    let mut next = blocks;
                    next.push(1 << p);
                    next.sort_unstable();
                    keep_min(&mut out, next, opened);
                }
            }
            NodeKind::Forget(v) => {
                let child = &node.children[0];
                let p = position(&ntd.node(*child).bag, v);
                for (blocks, m) in children.pop().expect("one child") {
                    let mut next: Blocks = blocks
                        .iter()
                        .filter(|&&b| b != 1 << p)
                        .map(|&b| remove_bit(b, p))
                        .collect();
                    next.sort_unstable();
                    keep_min(&mut out, next, m);
                }
            }
            NodeKind::Join => {
                let right = children.pop().expect("two children");
                let left = children.pop().expect("two children");
                for (blocks, ml) in left {
                    if let Some(&mr) = right.get(&blocks) {
                        keep_min(&mut out, blocks, ml.max(mr));
                    }
                }
            }
        }
        out
    });
    Ok(root.into_values().min().expect("some coloring exists"))
}

/// Block masks sorted, with a bitmask of flagged block indices.
type FlaggedBlocks = (Blocks, u32);

/// Sorts blocks by mask and permutes the flags to match.
fn canonical(mut blocks: Vec<(u32, bool)>) -> FlaggedBlocks {
    blocks.sort_unstable();
    let flags = blocks
        .iter()
        .enumerate()
        .filter(|(_, &(_, h))| h)
        .fold(0, |f, (i, _)| f | 1 << i);
    (blocks.into_iter().map(|(b, _)| b).collect(), flags)
}

fn with_flags(state: &FlaggedBlocks) -> impl Iterator<Item = (u32, bool)> + '_ {
    state.0.iter().enumerate().map(move |(i, &b)| (b, state.1 >> i & 1 == 1))
}

/// Clique covering number.
pub fn theta_tw(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<usize> {
    check_nice(g, ntd, PARTITION_MAX_BAG, "bag size for the clique cover partitions")?;
    let root = fold_nice(ntd, |node: &NiceNode, mut children: Vec<HashMap<FlaggedBlocks, usize>>| {
        let bag = &node.bag;
        let mut out: HashMap<FlaggedBlocks, usize> = HashMap::new();
        match node.kind {
            NodeKind::Leaf => {
                out.insert((vec![1], 0), 0);
            }
            NodeKind::Introduce(v) => {
                let p = position(bag, v);
                let adj = neighbor_mask(g, bag, v);
                for (state, t) in children.pop().expect("one child") {
                    let blocks: Vec<(u32, bool)> =
                        with_flags(&state).map(|(b, h)| (insert_bit(b, p), h)).collect();
                    for (i, &(b, h)) in blocks.iter().enumerate() {
                        if !h && b & !adj == 0 {
                            let mut next = blocks.clone();
                            next[i].0 |= 1 << p;
                            keep_min(&mut out, canonical(next), t);
                        }
                    }
                    let mut next = blocks;
                    next.push((1 << p, false));
                    keep_min(&mut out, canonical(next), t);
                }
            }
            NodeKind::Forget(v) => {
                let child = &node.children[0];
                let p = position(&ntd.node(*child).bag, v);
                for (state, t) in children.pop().expect("one child") {
                    let mut retired = 0;
                    let next: Vec<(u32, bool)> = with_flags(&state)
                        .filter_map(|(b, h)| {
                            if b == 1 << p {
                                retired += 1;
                                None
                            } else if b >> p & 1 == 1 {
                                Some((remove_bit(b, p), true))
                            } else {
                                Some((remove_bit(b, p), h))
                            }
                        })
                        .collect();
                    keep_min(&mut out, canonical(next), t + retired);
                }
            }
            NodeKind::Join => {
                let right = children.pop().expect("two children");
                let left = children.pop().expect("two children");
                let mut by_blocks: HashMap<Blocks, Vec<(u32, usize)>> = HashMap::new();
                for ((blocks, flags), t) in right {
                    by_blocks.entry(blocks).or_default().push((flags, t));
                }
                for ((blocks, fl), tl) in left {
                    let Some(matches) = by_blocks.get(&blocks) else {
                        continue;
                    };
                    for &(fr, tr) in matches {
                        if fl & fr == 0 {
                            keep_min(&mut out, (blocks.clone(), fl | fr), tl + tr);
                        }
                    }
                }
            }
        }
        out
    });
    Ok(root
        .into_iter()
        .map(|((blocks, _), t)| t + blocks.len())
        .min()
        .expect("some clique cover exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::td::{make_nice, TreeDecomposition};

    fn chain(n: usize) -> TreeDecomposition {
        let bags = (1..n).map(|i| (i, vec![i, i + 1])).collect();
        let edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
        TreeDecomposition::new(n, bags, &edges).unwrap()
    }

    #[test]
    fn p3_colors_with_two_and_covers_with_two() {
        let g = Graph::path(3).unwrap();
        let ntd = make_nice(&chain(3), &g).unwrap();
        assert_eq!(chi_tw(&g, &ntd).unwrap(), 2);
        assert_eq!(theta_tw(&g, &ntd).unwrap(), 2);
    }

    #[test]
    fn p5_reuses_colors() {
        let g = Graph::path(5).unwrap();
        let ntd = make_nice(&chain(5), &g).unwrap();
        assert_eq!(chi_tw(&g, &ntd).unwrap(), 2);
        assert_eq!(theta_tw(&g, &ntd).unwrap(), 3);
    }

    #[test]
    fn cliques() {
        let k3 = Graph::complete(3).unwrap();
        let td = TreeDecomposition::new(3, vec![(1, vec![1, 2, 3])], &[]).unwrap();
        let ntd = make_nice(&td, &k3).unwrap();
        assert_eq!(chi_tw(&k3, &ntd).unwrap(), 3);
        assert_eq!(theta_tw(&k3, &ntd).unwrap(), 1);
    }

    #[test]
    fn star_needs_hidden_flags() {
        // Two leaves forgotten in separate subtrees must not share the centre's clique.
        let g = Graph::new(3, [(1, 2), (1, 3)]).unwrap();
        let td = TreeDecomposition::new(3, vec![(1, vec![1]), (2, vec![1, 2]), (3, vec![1, 3])], &[(1, 2), (1, 3)])
            .unwrap();
        let ntd = make_nice(&td, &g).unwrap();
        assert_eq!(theta_tw(&g, &ntd).unwrap(), 2);
    }
}
