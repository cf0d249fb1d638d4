use crate::error::{Error, Result};
use crate::graph::{Graph, ParamReport};

/// Largest vertex count [`brute_params`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// All four parameters by exhaustive search: independence and clique number
/// by enumerating vertex subsets, chromatic number by backtracking over color
/// counts, clique covering number as the chromatic number of the complement.
pub fn brute_params(g: &Graph) -> Result<ParamReport> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Guard {
            what: "vertex count for exhaustive search",
            actual: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let adj = adjacency_masks(g);
    let co_adj = complement_masks(&adj);
    Ok(ParamReport::new(
        max_independent(&adj),
        max_independent(&co_adj),
        chromatic(&adj, max_independent(&co_adj)),
        chromatic(&co_adj, max_independent(&adj)),
    ))
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect()
}

fn complement_masks(adj: &[u32]) -> Vec<u32> {
    let full = (1u32 << adj.len()) - 1;
    adj.iter()
        .enumerate()
        .map(|(i, &m)| !m & full & !(1 << i))
        .collect()
}

fn is_independent(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        if adj[i] & set != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

fn max_independent(adj: &[u32]) -> usize {
    (0u32..1 << adj.len())
        .filter(|&s| is_independent(adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `c` in `lower..` admitting a proper `c`-coloring.
fn chromatic(adj: &[u32], lower: usize) -> usize {
    let upper = greedy_colors(adj);
    (lower.max(1)..upper)
        .find(|&c| colorable(adj, c))
        .unwrap_or(upper)
}

fn greedy_colors(adj: &[u32]) -> usize {
    let mut color = vec![usize::MAX; adj.len()];
    for v in 0..adj.len() {
        let mut used = vec![false; adj.len() + 1];
        for (w, &c) in color.iter().enumerate() {
            if c != usize::MAX && adj[v] & (1 << w) != 0 {
                used[c] = true;
            }
        }
        color[v] = used.iter().position(|&u| !u).expect("a free color exists");
    }
    color.iter().map(|&c| c + 1).max().unwrap_or(0)
}

fn colorable(adj: &[u32], colors: usize) -> bool {
    fn go(adj: &[u32], classes: &mut Vec<u32>, colors: usize, v: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= 1 << v;
                if go(adj, classes, colors, v + 1) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        // Opening a new class only once per position breaks color symmetry.
        if classes.len() < colors {
            classes.push(1 << v);
            if go(adj, classes, colors, v + 1) {
                return true;
            }
            classes.pop();
        }
        false
    }
    go(adj, &mut Vec::with_capacity(colors), colors, 0)
}
