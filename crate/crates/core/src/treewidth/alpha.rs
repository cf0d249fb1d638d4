use super::{check_nice, fold_nice, insert_bit, neighbor_mask, position, ALPHA_MAX_BAG};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::td::{NiceNode, NiceTreeDecomposition, NodeKind};

/// For each subset `X` of a bag (as a position mask), the size of a largest
/// independent set of the subtree's graph whose trace on the bag is `X`.
/// `None` when no such set exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBagTable {
    bag: Vec<Vertex>,
    entries: Vec<Option<u32>>,
}

impl AlphaBagTable {
    pub fn bag(&self) -> &[Vertex] {
        &self.bag
    }

    /// Present entries as `(trace, size)` with the trace as vertices.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<Vertex>, usize)> + '_ {
        self.entries.iter().enumerate().filter_map(|(mask, a)| {
            let trace = self
                .bag
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            a.map(|a| (trace, a as usize))
        })
    }

    fn best(&self) -> usize {
        self.entries.iter().flatten().copied().max().unwrap_or(0) as usize
    }
}

/// Independence number.
pub fn alpha_tw(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<usize> {
    check_nice(g, ntd, ALPHA_MAX_BAG, "bag size for the independent set table")?;
    Ok(fold_nice(ntd, |node, children| step(g, node, children)).best())
}

/// Every node's table, in node order.
pub fn alpha_bag_tables(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<Vec<AlphaBagTable>> {
    check_nice(g, ntd, ALPHA_MAX_BAG, "bag size for the independent set table")?;
    let mut tables: Vec<AlphaBagTable> = Vec::with_capacity(ntd.node_count());
    for node in ntd.nodes() {
        let children = node.children.iter().map(|&c| tables[c].clone()).collect();
        tables.push(step(g, node, children));
    }
    Ok(tables)
}

fn step(g: &Graph, node: &NiceNode, children: Vec<AlphaBagTable>) -> AlphaBagTable {
    let bag = &node.bag;
    let entries = match node.kind {
        NodeKind::Leaf => vec![Some(0), Some(1)],
        NodeKind::Introduce(v) => {
            let p = position(bag, v);
            let adj = neighbor_mask(g, bag, v);
            let child = &children[0].entries;
            let mut out = vec![None; 1 << bag.len()];
            for (y, &a) in child.iter().enumerate() {
                let x = insert_bit(y as u32, p);
                out[x as usize] = a;
                if x & adj == 0 {
                    out[(x | 1 << p) as usize] = a.map(|a| a + 1);
                }
            }
            out
        }
        NodeKind::Forget(v) => {
            let child = &children[0];
            let p = position(&child.bag, v);
            (0..1u32 << bag.len())
                .map(|z| {
                    let without = insert_bit(z, p);
                    child.entries[without as usize].max(child.entries[(without | 1 << p) as usize])
                })
                .collect()
        }
        NodeKind::Join => {
            let (l, r) = (&children[0].entries, &children[1].entries);
            (0..1usize << bag.len())
                .map(|x| match (l[x], r[x]) {
                    (Some(a), Some(b)) => Some(a + b - x.count_ones()),
                    _ => None,
                })
                .collect()
        }
    };
    AlphaBagTable {
        bag: bag.clone(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SetKind;
    use crate::td::{make_nice, TreeDecomposition};

    #[test]
    fn path_and_clique() {
        let p3 = Graph::path(3).unwrap();
        let td = TreeDecomposition::new(3, vec![(1, vec![1, 2]), (2, vec![2, 3])], &[(1, 2)]).unwrap();
        assert_eq!(alpha_tw(&p3, &make_nice(&td, &p3).unwrap()).unwrap(), 2);
        let k4 = Graph::complete(4).unwrap();
        let td = TreeDecomposition::new(4, vec![(1, vec![1, 2, 3, 4])], &[]).unwrap();
        assert_eq!(alpha_tw(&k4, &make_nice(&td, &k4).unwrap()).unwrap(), 1);
    }

    #[test]
    fn table_keys_are_independent() {
        let g = Graph::cycle(6).unwrap();
        let td = TreeDecomposition::new(
            6,
            vec![(1, vec![1, 2, 6]), (2, vec![2, 5, 6]), (3, vec![2, 3, 5]), (4, vec![3, 4, 5])],
            &[(1, 2), (2, 3), (3, 4)],
        )
        .unwrap();
        let ntd = make_nice(&td, &g).unwrap();
        for t in alpha_bag_tables(&g, &ntd).unwrap() {
            for (x, a) in t.entries() {
                assert!(g.check_set(&x, SetKind::Independent).unwrap(), "{x:?}");
                assert!(a >= x.len());
            }
        }
        assert_eq!(alpha_tw(&g, &ntd).unwrap(), 3);
    }
}
