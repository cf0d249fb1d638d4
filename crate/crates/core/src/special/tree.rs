use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, ParamReport, Vertex};

/// A tree with a chosen root.
#[derive(Clone, Debug)]
pub struct RootedTree {
    graph: Graph,
    root: Vertex,
    /// Breadth-first order from the root.
    order: Vec<Vertex>,
    parent: Vec<Vertex>,
}

impl RootedTree {
    /// Fails unless `graph` is connected with `n - 1` edges.
    pub fn new(graph: Graph, root: Vertex) -> Result<Self> {
        let n = graph.vertex_count();
        if !graph.contains_vertex(root) {
            return Err(Error::input(format!("root {root} is not a vertex")));
        }
        if graph.edge_count() + 1 != n {
            return Err(Error::input(format!(
                "not a tree: {n} vertices and {} edges",
                graph.edge_count()
            )));
        }
        let mut parent = vec![0; n + 1];
        let mut seen = vec![false; n + 1];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in graph.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::input("not a tree: graph is disconnected"));
        }
        Ok(RootedTree {
            graph,
            root,
            order,
            parent,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// `None` for the root.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        (v != self.root).then(|| self.parent[v])
    }

    pub fn children(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let p = self.parent(v);
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(w) != p)
    }

    pub fn grandchildren(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.children(v).flat_map(move |c| self.children(c))
    }
}

/// Parameters of a tree. The independence number follows
/// `alpha(T_r) = max(sum over children alpha(T_c), 1 + sum over grandchildren alpha(T_g))`,
/// evaluated bottom-up once per vertex. Trees are bipartite and perfect, so
/// `omega = chi = 2` once there is an edge, and `theta = alpha`.
pub fn tree_params(t: &RootedTree) -> ParamReport {
    let n = t.graph.vertex_count();
    let mut alpha = vec![0usize; n + 1];
    // Sum of alpha over the children of v, kept for v's parent's grandchild sum.
    let mut child_sum = vec![0usize; n + 1];
    let mut grandchild_sum = vec![0usize; n + 1];
    for &v in t.order.iter().rev() {
        alpha[v] = child_sum[v].max(1 + grandchild_sum[v]);
        if let Some(p) = t.parent(v) {
            child_sum[p] += alpha[v];
            grandchild_sum[p] += child_sum[v];
        }
    }
    let a = alpha[t.root];
    let two = if n == 1 { 1 } else { 2 };
    ParamReport::new(a, two, two, a)
}
