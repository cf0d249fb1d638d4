//! Tree decompositions: the PACE `.td` format, validation and width.

mod nice;

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};

pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};

use crate::error::{Error, Result};
use crate::graph::{parse_usize, Graph, Vertex};

/// Bags on an undirected tree. Bags are sorted vertex lists; tree nodes are
/// addressed by index, and keep the bag id they were read with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    ids: Vec<usize>,
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
}

/// A failed condition of a tree decomposition, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    /// A bag names a vertex the graph does not have.
    UnknownVertex(Vertex),
    /// The vertex is in no bag.
    UncoveredVertex(Vertex),
    /// No bag contains both endpoints.
    UncoveredEdge(Vertex, Vertex),
    /// The bags containing the vertex do not form a connected subtree.
    Disconnected(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex(v) => write!(f, "vertex {v} is not in the graph"),
            Violation::UncoveredVertex(v) => write!(f, "vertex {v} is in no bag"),
            Violation::UncoveredEdge(u, v) => write!(f, "edge {{{u},{v}}} is in no bag"),
            Violation::Disconnected(v) => {
                write!(f, "bags containing vertex {v} are not connected")
            }
        }
    }
}

impl TreeDecomposition {
    /// `bags` are `(id, vertices)`; `edges` join bag ids. The edges must form
    /// a tree on the bags, and every vertex must be in `1..=n`.
    pub fn new(
        n: usize,
        bags: Vec<(usize, Vec<Vertex>)>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        if bags.is_empty() {
            return Err(Error::input("a tree decomposition needs at least one bag"));
        }
        let mut index = HashMap::new();
        let mut ids = Vec::with_capacity(bags.len());
        let mut sets = Vec::with_capacity(bags.len());
        for (i, (id, mut bag)) in bags.into_iter().enumerate() {
            if index.insert(id, i).is_some() {
                return Err(Error::input(format!("bag id {id} is used twice")));
            }
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::input(format!("bag {id} names vertex {v} outside 1..={n}")));
            }
            ids.push(id);
            sets.push(bag);
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (&x, &y) = match (index.get(&a), index.get(&b)) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::input(format!("tree edge {a} {b} names an unknown bag"))),
            };
            if x == y {
                return Err(Error::input(format!("tree edge {a} {b} is a loop")));
            }
            idx_edges.push((x, y));
        }
        let td = TreeDecomposition {
            n,
            ids,
            bags: sets,
            edges: idx_edges,
        };
        if td.edges.len() + 1 != td.bags.len() || !td.connected() {
            return Err(Error::input("tree edges do not form a tree on the bags"));
        }
        Ok(td)
    }

    fn connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.bags.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.bags.len()
    }

    /// Neighbor lists by index, each sorted by bag id.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(x, y) in &self.edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&i| self.ids[i]);
        }
        adj
    }

    /// Vertex count of the graph this decomposition is for.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn bag_ids(&self) -> &[usize] {
        &self.ids
    }

    /// Tree edges as pairs of bag indices.
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Parses the `.td` format against `g`. Structural problems of the tree
    /// are errors; the decomposition conditions are left to [`validate_td`].
    pub fn parse(text: &str, g: &Graph) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut bags: Vec<(usize, Vec<Vertex>)> = Vec::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some((count, _)) = header else {
                if fields.len() != 5 || fields[0] != "s" || fields[1] != "td" {
                    return Err(Error::syntax(line_no, 1, "expected header `s td <bags> <maxbagsize> <n>`"));
                }
                let count = parse_usize(fields[2], line_no)?;
                let max_bag = parse_usize(fields[3], line_no)?;
                let n = parse_usize(fields[4], line_no)?;
                if n != g.vertex_count() {
                    return Err(Error::input(format!(
                        "decomposition is for {n} vertices, graph has {}",
                        g.vertex_count()
                    )));
                }
                header = Some((count, max_bag));
                continue;
            };
            if fields[0] == "b" {
                if fields.len() < 2 {
                    return Err(Error::syntax(line_no, 1, "expected `b <bagid> <vertices...>`"));
                }
                let id = parse_usize(fields[1], line_no)?;
                if id == 0 || id > count {
                    return Err(Error::syntax(line_no, 1, format!("bag id {id} outside 1..={count}")));
                }
                let mut bag = Vec::with_capacity(fields.len() - 2);
                for f in &fields[2..] {
                    let v = parse_usize(f, line_no)?;
                    if v == 0 || v > g.vertex_count() {
                        return Err(Error::input(format!(
                            "line {line_no}: bag {id} names vertex {v}, graph has {} vertices",
                            g.vertex_count()
                        )));
                    }
                    bag.push(v);
                }
                bags.push((id, bag));
            } else {
                if fields.len() != 2 {
                    return Err(Error::syntax(line_no, 1, "expected tree edge `<bagid> <bagid>`"));
                }
                edges.push((parse_usize(fields[0], line_no)?, parse_usize(fields[1], line_no)?));
            }
            if bags.len() > count {
                return Err(Error::input(format!("more than the announced {count} bags")));
            }
        }
        let (count, max_bag) = header.ok_or_else(|| Error::syntax(1, 1, "missing `s td` header"))?;
        if bags.len() != count {
            return Err(Error::input(format!(
                "header announces {count} bags but {} were given",
                bags.len()
            )));
        }
        let td = TreeDecomposition::new(g.vertex_count(), bags, &edges)?;
        let actual = td.bags.iter().map(Vec::len).max().unwrap_or(0);
        if actual != max_bag {
            return Err(Error::input(format!(
                "header announces maximum bag size {max_bag}, largest bag has {actual}"
            )));
        }
        Ok(td)
    }

    /// Writes the `.td` format; bags are renumbered `1..=count` in index order.
    pub fn to_td(&self) -> String {
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = format!("s td {} {} {}\n", self.bags.len(), max_bag, self.n);
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for v in bag {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        for &(x, y) in &self.edges {
            let _ = writeln!(out, "{} {}", x + 1, y + 1);
        }
        out
    }
}

/// Parses a `.td` file for `g`.
pub fn parse_td(text: &str, g: &Graph) -> Result<TreeDecomposition> {
    TreeDecomposition::parse(text, g)
}

pub fn width(td: &TreeDecomposition) -> usize {
    td.width()
}

/// Checks that every vertex is in some bag, every edge inside some bag, and
/// that the bags holding any one vertex are connected in the tree. Returns
/// every violation found, empty when `td` is a tree decomposition of `g`.
pub fn validate_td(td: &TreeDecomposition, g: &Graph) -> Vec<Violation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut occurrences = vec![Vec::new(); n + 1];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v > n {
                out.push(Violation::UnknownVertex(v));
            } else {
                occurrences[v].push(i);
            }
        }
    }
    out.sort();
    out.dedup();
    for v in 1..=n {
        if occurrences[v].is_empty() {
            out.push(Violation::UncoveredVertex(v));
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = (&occurrences[u], &occurrences[v]);
        if !sorted_intersect(a, b) {
            out.push(Violation::UncoveredEdge(u, v));
        }
    }
    // The occurrence set of v induces a forest in the tree, connected iff it
    // has exactly |occurrences| - 1 tree edges.
    let mut shared = vec![0usize; n + 1];
    for &(x, y) in &td.edges {
        let (a, b) = (&td.bags[x], &td.bags[y]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] <= n {
                        shared[a[i]] += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    for v in 1..=n {
        if !occurrences[v].is_empty() && shared[v] + 1 != occurrences[v].len() {
            out.push(Violation::Disconnected(v));
        }
    }
    out
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
