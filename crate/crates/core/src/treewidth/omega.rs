use super::{guard_bag, neighbor_mask, OMEGA_MAX_BAG};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::td::{validate_td, TreeDecomposition};

/// Clique number: every clique lies inside one bag, so this is the largest
/// clique found by enumerating the subsets of each bag. Any valid
/// decomposition works; it need not be nice.
pub fn omega_tw(g: &Graph, td: &TreeDecomposition) -> Result<usize> {
    let violations = validate_td(td, g);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    guard_bag(td.width() + 1, OMEGA_MAX_BAG, "bag size for clique enumeration")?;
    let mut best = 0;
    for bag in td.bags() {
        let adj: Vec<u32> = bag.iter().map(|&v| neighbor_mask(g, bag, v)).collect();
        for set in 1u32..1 << bag.len() {
            let size = set.count_ones() as usize;
            if size > best && is_clique(&adj, set) {
                best = size;
            }
        }
    }
    Ok(best)
}

fn is_clique(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let i = rest.trailing_zeros();
        if (adj[i as usize] | 1 << i) & set != set {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k4 = Graph::complete(4).unwrap();
        let td = TreeDecomposition::new(4, vec![(1, vec![1, 2, 3, 4])], &[]).unwrap();
        assert_eq!(omega_tw(&k4, &td).unwrap(), 4);
        let p3 = Graph::path(3).unwrap();
        let td = TreeDecomposition::new(3, vec![(1, vec![1, 2]), (2, vec![2, 3])], &[(1, 2)]).unwrap();
        assert_eq!(omega_tw(&p3, &td).unwrap(), 2);
        let e2 = Graph::empty(2).unwrap();
        let td = TreeDecomposition::new(2, vec![(1, vec![1]), (2, vec![2])], &[(1, 2)]).unwrap();
        assert_eq!(omega_tw(&e2, &td).unwrap(), 1);
    }
}
