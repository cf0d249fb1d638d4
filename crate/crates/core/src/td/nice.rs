//! Nice tree decompositions.
//!
//! A rooted decomposition in which every node is a leaf with a one-vertex bag,
//! an introduce node adding one vertex to its child's bag, a forget node
//! dropping one vertex from its child's bag, or a join node with two children
//! carrying the same bag as itself.

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::{validate_td, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    /// Sorted.
    pub bag: Vec<Vertex>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Nodes are stored children-first: every child index is smaller than its
/// parent's, and the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    n: usize,
    nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &NiceNode {
        &self.nodes[id]
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|u| u.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Node-count ceiling `8 (k + 1) n` for width `k`.
    pub fn node_bound(&self) -> usize {
        8 * (self.width() + 1) * self.n
    }

    /// The same bags and tree as a plain decomposition (bag ids are node
    /// indices plus one).
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, u)| (i + 1, u.bag.clone()))
            .collect();
        let edges: Vec<_> = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, u)| u.children.iter().map(move |&c| (i + 1, c + 1)))
            .collect();
        TreeDecomposition::new(self.n, bags, &edges).expect("nice decomposition is a tree")
    }

    /// Lists every broken structural condition: at most two children; join
    /// bags equal; introduce/forget differ from the child by exactly the named
    /// vertex; leaf bags have one vertex; node count within
    /// [`node_bound`](Self::node_bound). Empty when all hold.
    pub fn check_conditions(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, u) in self.nodes.iter().enumerate() {
            if u.children.iter().any(|&c| c >= i) {
                out.push(format!("node {i}: child stored after its parent"));
                continue;
            }
            match (u.kind, u.children.as_slice()) {
                (NodeKind::Leaf, []) => {
                    if u.bag.len() != 1 {
                        out.push(format!("node {i}: leaf bag has {} vertices", u.bag.len()));
                    }
                }
                (NodeKind::Join, &[a, b]) => {
                    if self.nodes[a].bag != u.bag || self.nodes[b].bag != u.bag {
                        out.push(format!("node {i}: join children carry different bags"));
                    }
                }
                (NodeKind::Introduce(v), &[c]) => {
                    let child = &self.nodes[c].bag;
                    if child.contains(&v) || u.bag.len() != child.len() + 1 || without(&u.bag, v) != *child {
                        out.push(format!("node {i}: introduce({v}) does not extend its child by {v}"));
                    }
                }
                (NodeKind::Forget(v), &[c]) => {
                    let child = &self.nodes[c].bag;
                    if u.bag.contains(&v) || child.len() != u.bag.len() + 1 || without(child, v) != u.bag {
                        out.push(format!("node {i}: forget({v}) does not shrink its child by {v}"));
                    }
                }
                (kind, children) => out.push(format!(
                    "node {i}: kind {kind:?} with {} children",
                    children.len()
                )),
            }
        }
        if self.nodes.len() > self.node_bound() {
            out.push(format!(
                "{} nodes exceed the bound {}",
                self.nodes.len(),
                self.node_bound()
            ));
        }
        out
    }

    /// `.td` text with one comment line per node naming its kind.
    pub fn to_td(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c nice root {}", self.root() + 1);
        for (i, u) in self.nodes.iter().enumerate() {
            let kind = match u.kind {
                NodeKind::Leaf => "leaf".to_string(),
                NodeKind::Introduce(v) => format!("introduce {v}"),
                NodeKind::Forget(v) => format!("forget {v}"),
                NodeKind::Join => "join".to_string(),
            };
            let _ = writeln!(out, "c node {} {kind}", i + 1);
        }
        out.push_str(&self.to_tree_decomposition().to_td());
        out
    }
}

fn without(bag: &[Vertex], v: Vertex) -> Vec<Vertex> {
    bag.iter().copied().filter(|&x| x != v).collect()
}

/// Turns a valid tree decomposition of `g` into a nice one of the same width.
///
/// The tree is rooted at the bag with the smallest id. Bags contained in
/// their parent's bag are merged into the parent first, which leaves at most
/// `n + 1` bags. Each remaining bag then becomes a chain: leaves start from
/// their smallest vertex and introduce the rest; every child is connected by
/// forgetting what its parent lacks and introducing what it lacks; several
/// children are combined by a chain of join nodes. All choices follow
/// ascending vertex and bag order.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    let violations = validate_td(td, g);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    let bags = td.bags();
    let adj = td.adjacency();
    let root = (0..bags.len())
        .min_by_key(|&i| td.bag_ids()[i])
        .expect("at least one bag");

    let mut order = Vec::with_capacity(bags.len());
    let mut parent = vec![usize::MAX; bags.len()];
    let mut seen = vec![false; bags.len()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }

    // Merge bags into a representative ancestor whenever they are a subset of it.
    let mut rep: Vec<usize> = (0..bags.len()).collect();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); bags.len()];
    for &u in &order[1..] {
        let p = rep[parent[u]];
        if is_subset(&bags[u], &bags[p]) {
            rep[u] = p;
        } else {
            children[p].push(u);
        }
    }

    let mut b = Builder { nodes: Vec::new() };
    let mut top = vec![usize::MAX; bags.len()];
    for &u in order.iter().rev() {
        if rep[u] != u {
            continue;
        }
        let bag = &bags[u];
        let mut tops = Vec::with_capacity(children[u].len());
        for &c in &children[u] {
            tops.push(b.transition(top[c], bag));
        }
        top[u] = match tops.split_first() {
            None => {
                let Some((&first, rest)) = bag.split_first() else {
                    return Err(Error::input("a leaf bag of the decomposition is empty"));
                };
                let mut id = b.push(vec![first], NodeKind::Leaf, vec![]);
                for &v in rest {
                    id = b.introduce(id, v);
                }
                id
            }
            Some((&first, rest)) => rest.iter().fold(first, |acc, &t| {
                b.push(bag.clone(), NodeKind::Join, vec![acc, t])
            }),
        };
    }
    debug_assert_eq!(top[root], b.nodes.len() - 1);
    Ok(NiceTreeDecomposition {
        n: g.vertex_count(),
        nodes: b.nodes,
    })
}

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, bag: Vec<Vertex>, kind: NodeKind, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { bag, kind, children });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, child: usize, v: Vertex) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let pos = bag.binary_search(&v).unwrap_err();
        bag.insert(pos, v);
        self.push(bag, NodeKind::Introduce(v), vec![child])
    }

    fn forget(&mut self, child: usize, v: Vertex) -> usize {
        let bag = without(&self.nodes[child].bag, v);
        self.push(bag, NodeKind::Forget(v), vec![child])
    }

    /// Chain from `from` up to a node whose bag is `target`.
    fn transition(&mut self, from: usize, target: &[Vertex]) -> usize {
        let source = self.nodes[from].bag.clone();
        let mut id = from;
        for &v in source.iter().filter(|v| target.binary_search(v).is_err()) {
            id = self.forget(id, v);
        }
        for &v in target.iter().filter(|v| source.binary_search(v).is_err()) {
            id = self.introduce(id, v);
        }
        id
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::td::parse_td;

    #[test]
    fn single_bag_gives_leaf_then_introduce() {
        let g = Graph::complete(2).unwrap();
        let td = parse_td("s td 1 2 2\nb 1 1 2\n", &g).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        assert_eq!(
            nice.nodes(),
            &[
                NiceNode { bag: vec![1], kind: NodeKind::Leaf, children: vec![] },
                NiceNode { bag: vec![1, 2], kind: NodeKind::Introduce(2), children: vec![0] },
            ]
        );
    }

    #[test]
    fn chain_is_nice_and_keeps_width() {
        let g = Graph::path(3).unwrap();
        let td = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", &g).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        assert!(nice.check_conditions().is_empty(), "{:?}", nice.check_conditions());
        assert_eq!(nice.width(), 1);
        assert!(validate_td(&nice.to_tree_decomposition(), &g).is_empty());
    }

    #[test]
    fn degree_three_node_gets_joins() {
        // Star K_{1,3}: center bag 1 = {1,2}, then {1,3} and {1,4} hang off it.
        let g = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let td = TreeDecomposition::new(
            4,
            vec![(1, vec![1, 2]), (2, vec![1, 3]), (3, vec![1, 4]), (4, vec![1])],
            &[(1, 4), (4, 2), (4, 3)],
        )
        .unwrap();
        let nice = make_nice(&td, &g).unwrap();
        assert!(nice.check_conditions().is_empty(), "{:?}", nice.check_conditions());
        let joins: Vec<_> = nice.nodes().iter().filter(|u| u.kind == NodeKind::Join).collect();
        assert!(!joins.is_empty());
        for j in joins {
            for &c in &j.children {
                assert_eq!(nice.node(c).bag, j.bag);
            }
        }
    }

    #[test]
    fn redundant_bags_are_merged() {
        let g = Graph::complete(2).unwrap();
        let bags = (1..=50).map(|i| (i, vec![1 + i % 2])).chain([(51, vec![1, 2])]).collect();
        let edges: Vec<_> = (1..=50).map(|i| (i, 51)).collect();
        let td = TreeDecomposition::new(2, bags, &edges).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        assert!(nice.check_conditions().is_empty(), "{:?}", nice.check_conditions());
        assert!(nice.node_count() <= nice.node_bound());
    }

    #[test]
    fn invalid_input_is_rejected() {
        let g = Graph::path(3).unwrap();
        let td = TreeDecomposition::new(3, vec![(1, vec![1]), (2, vec![3])], &[(1, 2)]).unwrap();
        assert!(matches!(make_nice(&td, &g), Err(Error::InvalidDecomposition(v)) if v.len() == 3));
    }

    #[test]
    fn disconnected_graph_with_empty_root_bag() {
        let g = Graph::empty(2).unwrap();
        let td = TreeDecomposition::new(
            2,
            vec![(1, vec![]), (2, vec![1]), (3, vec![2])],
            &[(1, 2), (1, 3)],
        )
        .unwrap();
        let nice = make_nice(&td, &g).unwrap();
        assert!(nice.check_conditions().is_empty(), "{:?}", nice.check_conditions());
        assert!(nice.node(nice.root()).bag.is_empty());
    }
}
