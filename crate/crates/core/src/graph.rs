//! Plain and labeled graphs.
//!
//! Vertices are the dense integers `1..=n`. Every [`Graph`] keeps its edge
//! list together with an adjacency index, so `adjacent(u, v)` is a constant
//! time lookup from inside the dynamic programming loops.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex of a [`Graph`], always in `1..=n`.
pub type Vertex = usize;

/// A label of a [`LabeledGraph`] or width expression, always in `1..=k`.
pub type Label = usize;

/// Finite simple undirected graph on the vertices `1..=n`, `n >= 1`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
    edge_set: HashSet<(Vertex, Vertex)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting `n = 0`, self-loops, duplicate edges and
    /// endpoints outside `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("graph must have at least one vertex"));
        }
        let mut edge_set = HashSet::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::input(format!(
                    "edge {{{u},{v}}} has an endpoint outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if !edge_set.insert(key(u, v)) {
                return Err(Error::input(format!("duplicate edge {{{u},{v}}}")));
            }
        }
        Ok(Self::from_edge_set(n, edge_set))
    }

    fn from_edge_set(n: usize, edge_set: HashSet<(Vertex, Vertex)>) -> Self {
        let mut edges: Vec<_> = edge_set.iter().copied().collect();
        edges.sort_unstable();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u - 1].push(v);
            neighbors[v - 1].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
            edge_set,
        }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(
            n,
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))),
        )
    }

    /// Path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input("a cycle needs at least 3 vertices"));
        }
        Self::new(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v - 1].len()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edge_set.contains(&key(u, v))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Same vertices, edge set replaced by the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let mut edge_set = HashSet::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.adjacent(u, v) {
                    edge_set.insert((u, v));
                }
            }
        }
        Self::from_edge_set(self.n, edge_set)
    }

    /// Whether `set` is independent (resp. a clique). Empty and singleton sets
    /// are both.
    pub fn check_set(&self, set: &[Vertex], kind: SetKind) -> Result<bool> {
        if let Some(&bad) = set.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(Error::input(format!(
                "vertex {bad} is outside 1..={}",
                self.n
            )));
        }
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v {
                    continue;
                }
                let adj = self.adjacent(u, v);
                match kind {
                    SetKind::Independent if adj => return Ok(false),
                    SetKind::Clique if !adj => return Ok(false),
                    _ => {}
                }
            }
        }
        Ok(true)
    }

    /// Parses the PACE-style graph format (`p tw <n> <m>` header).
    pub fn parse_pace(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 4 || fields[0] != "p" || fields[1] != "tw" {
                        return Err(Error::syntax(line_no, 1, "expected header `p tw <n> <m>`"));
                    }
                    let n = parse_usize(fields[2], line_no)?;
                    let m = parse_usize(fields[3], line_no)?;
                    if n == 0 {
                        return Err(Error::input("graph must have at least one vertex"));
                    }
                    header = Some((n, m));
                }
                Some((n, _)) => {
                    if fields.len() != 2 {
                        return Err(Error::syntax(line_no, 1, "expected edge line `<u> <v>`"));
                    }
                    let u = parse_usize(fields[0], line_no)?;
                    let v = parse_usize(fields[1], line_no)?;
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(Error::syntax(
                            line_no,
                            1,
                            format!("edge endpoint outside 1..={n}"),
                        ));
                    }
                    if u == v {
                        return Err(Error::syntax(line_no, 1, format!("self-loop at vertex {u}")));
                    }
                    if !seen.insert(key(u, v)) {
                        return Err(Error::syntax(
                            line_no,
                            1,
                            format!("duplicate edge {{{u},{v}}}"),
                        ));
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::syntax(1, 1, "missing `p tw` header"))?;
        if edges.len() != m {
            return Err(Error::input(format!(
                "header announces {m} edges but {} were given",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    /// Writes the PACE-style graph format.
    pub fn to_pace(&self) -> String {
        let mut out = format!("p tw {} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

pub(crate) fn parse_usize(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::syntax(line, 1, format!("expected a non-negative integer, found `{field}`")))
}

/// Which property [`Graph::check_set`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Independent,
    Clique,
}

/// A graph together with a total labeling of its vertices into `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    k: usize,
    labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, k: usize, labels: Vec<Label>) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("label alphabet must be non-empty"));
        }
        if labels.len() != graph.vertex_count() {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        if let Some(bad) = labels.iter().find(|&&a| a == 0 || a > k) {
            return Err(Error::input(format!("label {bad} outside 1..={k}")));
        }
        Ok(LabeledGraph { graph, k, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Edge complement, labels unchanged.
    pub fn complement(&self) -> LabeledGraph {
        LabeledGraph {
            graph: self.graph.complement(),
            k: self.k,
            labels: self.labels.clone(),
        }
    }
}

/// The four basic parameters of one graph, plus the vertex cover number when
/// it has been derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub theta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
}

impl ParamReport {
    pub fn new(alpha: usize, omega: usize, chi: usize, theta: usize) -> Self {
        ParamReport {
            alpha,
            omega,
            chi,
            theta,
            tau: None,
        }
    }

    /// Fills in `tau` from the independence number.
    pub fn with_tau(mut self, n: usize) -> Result<Self> {
        self.tau = Some(vertex_cover_number(n, self.alpha)?);
        Ok(self)
    }
}

/// Vertex cover number from the independence number: every vertex cover is
/// the complement of an independent set, so `tau = n - alpha`.
pub fn vertex_cover_number(n: usize, alpha: usize) -> Result<usize> {
    if alpha == 0 || alpha > n {
        return Err(Error::input(format!(
            "independence number {alpha} is not in 1..={n}"
        )));
    }
    Ok(n - alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let single = Graph::empty(1).unwrap();
        assert_eq!(single.complement(), single);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn set_checks_on_p3() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.check_set(&[1, 3], SetKind::Independent).unwrap());
        assert!(p3.check_set(&[1, 2], SetKind::Clique).unwrap());
        assert!(!p3.check_set(&[1, 2, 3], SetKind::Clique).unwrap());
        assert!(p3.check_set(&[], SetKind::Clique).unwrap());
        assert!(p3.check_set(&[2], SetKind::Independent).unwrap());
        assert!(p3.check_set(&[4], SetKind::Clique).is_err());
    }

    #[test]
    fn gallai() {
        assert_eq!(vertex_cover_number(5, 2).unwrap(), 3);
        assert_eq!(vertex_cover_number(1, 1).unwrap(), 0);
        assert_eq!(vertex_cover_number(6, 1).unwrap(), 5);
        assert!(vertex_cover_number(3, 4).is_err());
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(Graph::new(0, []).is_err());
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
    }

    #[test]
    fn pace_format() {
        let text = "c a path\np tw 3 2\n1 2\n2 3\n";
        let g = Graph::parse_pace(text).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(Graph::parse_pace(&g.to_pace()).unwrap(), g);

        assert!(Graph::parse_pace("p tw 3 2\n1 2\n1 2\n").is_err());
        assert!(Graph::parse_pace("p tw 3 1\n2 2\n").is_err());
        assert!(Graph::parse_pace("p tw 3 2\n1 2\n").is_err());
        assert!(Graph::parse_pace("p tw 0 0\n").is_err());
        let err = Graph::parse_pace("p tw 3 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
    }
}
