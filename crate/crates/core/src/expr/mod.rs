//! Clique-width and NLC-width expressions.
//!
//! A clique-width expression is built from single labeled vertices, disjoint
//! union, edge insertion between two label classes and relabeling of one label
//! to another. An NLC-width expression is built from single labeled vertices,
//! a join `x_S` that unions two graphs and connects every left vertex labeled
//! `a` with every right vertex labeled `b` for `(a, b)` in `S`, and relabeling
//! by a total map on the labels.
//!
//! The vertices of `val(X)` are numbered by leaf order: the leftmost leaf of
//! the expression is vertex 1.

mod convert;
mod families;
mod parse;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

pub use convert::{cw_to_nlc, nlc_complement};
pub use families::{gen_family, Family};
pub use parse::{parse_cw, parse_expr, parse_nlc};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, LabeledGraph, Vertex};

/// Largest label alphabet an expression may declare; label sets are `u32`
/// bitmasks.
pub const MAX_LABELS: usize = 32;

/// Bit of label `a` in a label-set mask.
#[inline]
pub fn label_bit(a: Label) -> u32 {
    1 << (a - 1)
}

/// Which expression calculus a text or value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Calculus {
    CliqueWidth,
    Nlc,
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Calculus::CliqueWidth => "cw",
            Calculus::Nlc => "nlc",
        })
    }
}

/// Node of a clique-width expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CwNode {
    Leaf(Label),
    Union(Box<CwNode>, Box<CwNode>),
    /// `eta(a, b, child)`: edges between every `a`-vertex and every `b`-vertex.
    AddEdges(Label, Label, Box<CwNode>),
    /// `rho(a, b, child)`: label `a` becomes `b`.
    Relabel(Label, Label, Box<CwNode>),
}

impl CwNode {
    pub fn union(left: CwNode, right: CwNode) -> Self {
        CwNode::Union(Box::new(left), Box::new(right))
    }

    pub fn add_edges(a: Label, b: Label, child: CwNode) -> Self {
        CwNode::AddEdges(a, b, Box::new(child))
    }

    pub fn relabel(a: Label, b: Label, child: CwNode) -> Self {
        CwNode::Relabel(a, b, Box::new(child))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            CwNode::Leaf(_) => 1,
            CwNode::Union(l, r) => l.leaf_count() + r.leaf_count(),
            CwNode::AddEdges(_, _, c) | CwNode::Relabel(_, _, c) => c.leaf_count(),
        }
    }

    fn max_label(&self) -> Label {
        match self {
            CwNode::Leaf(a) => *a,
            CwNode::Union(l, r) => l.max_label().max(r.max_label()),
            CwNode::AddEdges(a, b, c) | CwNode::Relabel(a, b, c) => {
                (*a).max(*b).max(c.max_label())
            }
        }
    }

    /// Labels carried by at least one vertex of the subgraph, as a mask.
    pub fn live_labels(&self) -> u32 {
        match self {
            CwNode::Leaf(a) => label_bit(*a),
            CwNode::Union(l, r) => l.live_labels() | r.live_labels(),
            CwNode::AddEdges(_, _, c) => c.live_labels(),
            CwNode::Relabel(a, b, c) => {
                let live = c.live_labels();
                if live & label_bit(*a) != 0 {
                    (live & !label_bit(*a)) | label_bit(*b)
                } else {
                    live
                }
            }
        }
    }

    fn check(&self, k: usize) -> Result<()> {
        let in_range = |a: Label| {
            if a == 0 || a > k {
                Err(Error::input(format!("label {a} outside 1..={k}")))
            } else {
                Ok(())
            }
        };
        match self {
            CwNode::Leaf(a) => in_range(*a),
            CwNode::Union(l, r) => {
                l.check(k)?;
                r.check(k)
            }
            CwNode::AddEdges(a, b, c) | CwNode::Relabel(a, b, c) => {
                in_range(*a)?;
                in_range(*b)?;
                if a == b {
                    return Err(Error::input(format!(
                        "edge insertion and relabeling need distinct labels, got {a} twice"
                    )));
                }
                c.check(k)
            }
        }
    }
}

/// A clique-width `k`-expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CwExpr {
    k: usize,
    root: CwNode,
}

impl CwExpr {
    /// Validates labels against `k`; `k = None` uses the largest label.
    pub fn new(root: CwNode, k: Option<usize>) -> Result<Self> {
        let k = k.unwrap_or_else(|| root.max_label());
        if k == 0 || k > MAX_LABELS {
            return Err(Error::input(format!("label alphabet size {k} outside 1..={MAX_LABELS}")));
        }
        root.check(k)?;
        Ok(CwExpr { k, root })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn root(&self) -> &CwNode {
        &self.root
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    /// `val(X)`.
    pub fn eval(&self) -> LabeledGraph {
        let mut b = Builder::default();
        b.eval_cw(&self.root);
        b.finish(self.k)
    }

    pub fn expression_tree(&self) -> ExpressionTree {
        let mut t = ExpressionTree::default();
        t.root = t.push_cw(&self.root);
        t
    }
}

/// Relation `S` of a join, stored as a `k x k` boolean matrix with one row
/// bitmask per left label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JoinRelation {
    rows: Vec<u32>,
}

impl JoinRelation {
    pub fn empty(k: usize) -> Self {
        JoinRelation { rows: vec![0; k] }
    }

    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut s = Self::empty(k);
        for (a, b) in pairs {
            if a == 0 || b == 0 || a > k || b > k {
                return Err(Error::input(format!("pair ({a},{b}) outside [{k}]^2")));
            }
            s.rows[a - 1] |= label_bit(b);
        }
        Ok(s)
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, a: Label, b: Label) -> bool {
        self.rows[a - 1] & label_bit(b) != 0
    }

    /// Right labels related to left label `a`.
    #[inline]
    pub fn row(&self, a: Label) -> u32 {
        self.rows[a - 1]
    }

    /// Union of the rows of every label in `left`.
    pub fn image_of(&self, left: u32) -> u32 {
        bits(left).fold(0, |acc, a| acc | self.rows[a - 1])
    }

    /// Whether some pair of `left x right` is in `S`.
    pub fn meets(&self, left: u32, right: u32) -> bool {
        self.image_of(left) & right != 0
    }

    /// Whether every pair of `left x right` is in `S`.
    pub fn covers(&self, left: u32, right: u32) -> bool {
        bits(left).all(|a| self.rows[a - 1] & right == right)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| bits(row).map(move |b| (i + 1, b)))
    }

    /// `[k]^2 \ S`.
    pub fn complement(&self) -> Self {
        let full = full_mask(self.k());
        JoinRelation {
            rows: self.rows.iter().map(|r| !r & full).collect(),
        }
    }
}

/// Total map `R: [k] -> [k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relabeling {
    map: Vec<Label>,
}

impl Relabeling {
    pub fn identity(k: usize) -> Self {
        Relabeling {
            map: (1..=k).collect(),
        }
    }

    /// Identity except for the listed `a -> b` entries.
    pub fn from_entries(k: usize, entries: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut r = Self::identity(k);
        for (a, b) in entries {
            if a == 0 || b == 0 || a > k || b > k {
                return Err(Error::input(format!("relabel entry {a}:{b} outside [{k}]")));
            }
            r.map[a - 1] = b;
        }
        Ok(r)
    }

    /// `rho_{a->b}` as a total map.
    pub fn single(k: usize, a: Label, b: Label) -> Result<Self> {
        Self::from_entries(k, [(a, b)])
    }

    pub fn k(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, a: Label) -> Label {
        self.map[a - 1]
    }

    /// Image of a label-set mask.
    #[inline]
    pub fn apply_set(&self, set: u32) -> u32 {
        bits(set).fold(0, |acc, a| acc | label_bit(self.map[a - 1]))
    }

    /// Entries that are not fixed points.
    pub fn moved(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.map
            .iter()
            .enumerate()
            .map(|(i, &b)| (i + 1, b))
            .filter(|&(a, b)| a != b)
    }
}

/// Node of an NLC-width expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NlcNode {
    Leaf(Label),
    Join(JoinRelation, Box<NlcNode>, Box<NlcNode>),
    Relabel(Relabeling, Box<NlcNode>),
}

impl NlcNode {
    pub fn join(s: JoinRelation, left: NlcNode, right: NlcNode) -> Self {
        NlcNode::Join(s, Box::new(left), Box::new(right))
    }

    pub fn relabel(r: Relabeling, child: NlcNode) -> Self {
        NlcNode::Relabel(r, Box::new(child))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            NlcNode::Leaf(_) => 1,
            NlcNode::Join(_, l, r) => l.leaf_count() + r.leaf_count(),
            NlcNode::Relabel(_, c) => c.leaf_count(),
        }
    }

    fn max_label(&self) -> Label {
        match self {
            NlcNode::Leaf(a) => *a,
            NlcNode::Join(_, l, r) => l.max_label().max(r.max_label()),
            NlcNode::Relabel(_, c) => c.max_label(),
        }
    }

    fn check(&self, k: usize) -> Result<()> {
        match self {
            NlcNode::Leaf(a) if *a == 0 || *a > k => {
                Err(Error::input(format!("label {a} outside 1..={k}")))
            }
            NlcNode::Leaf(_) => Ok(()),
            NlcNode::Join(s, l, r) => {
                if s.k() != k {
                    return Err(Error::input(format!(
                        "join relation over [{}] in a {k}-expression",
                        s.k()
                    )));
                }
                l.check(k)?;
                r.check(k)
            }
            NlcNode::Relabel(m, c) => {
                if m.k() != k {
                    return Err(Error::input(format!(
                        "relabeling over [{}] in a {k}-expression",
                        m.k()
                    )));
                }
                c.check(k)
            }
        }
    }
}

/// An NLC-width `k`-expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NlcExpr {
    k: usize,
    root: NlcNode,
}

impl NlcExpr {
    /// Every relation and relabeling in `root` must be over exactly `[k]`.
    pub fn new(root: NlcNode, k: usize) -> Result<Self> {
        if k == 0 || k > MAX_LABELS {
            return Err(Error::input(format!("label alphabet size {k} outside 1..={MAX_LABELS}")));
        }
        root.check(k)?;
        Ok(NlcExpr { k, root })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn root(&self) -> &NlcNode {
        &self.root
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    /// Largest label on a leaf.
    pub fn max_leaf_label(&self) -> Label {
        self.root.max_label()
    }

    pub fn eval(&self) -> LabeledGraph {
        let mut b = Builder::default();
        b.eval_nlc(&self.root);
        b.finish(self.k)
    }

    pub fn expression_tree(&self) -> ExpressionTree {
        let mut t = ExpressionTree::default();
        t.root = t.push_nlc(&self.root);
        t
    }
}

/// Either kind of width expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WidthExpr {
    Cw(CwExpr),
    Nlc(NlcExpr),
}

impl WidthExpr {
    pub fn calculus(&self) -> Calculus {
        match self {
            WidthExpr::Cw(_) => Calculus::CliqueWidth,
            WidthExpr::Nlc(_) => Calculus::Nlc,
        }
    }

    pub fn k(&self) -> usize {
        match self {
            WidthExpr::Cw(x) => x.k(),
            WidthExpr::Nlc(x) => x.k(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            WidthExpr::Cw(x) => x.leaf_count(),
            WidthExpr::Nlc(x) => x.leaf_count(),
        }
    }

    pub fn eval(&self) -> LabeledGraph {
        match self {
            WidthExpr::Cw(x) => x.eval(),
            WidthExpr::Nlc(x) => x.eval(),
        }
    }

    pub fn expression_tree(&self) -> ExpressionTree {
        match self {
            WidthExpr::Cw(x) => x.expression_tree(),
            WidthExpr::Nlc(x) => x.expression_tree(),
        }
    }
}

impl From<CwExpr> for WidthExpr {
    fn from(x: CwExpr) -> Self {
        WidthExpr::Cw(x)
    }
}

impl From<NlcExpr> for WidthExpr {
    fn from(x: NlcExpr) -> Self {
        WidthExpr::Nlc(x)
    }
}

/// Ordered rooted tree of an expression: inner nodes are operations, leaves are
/// the vertices of `val(X)` in left-to-right order.
#[derive(Clone, Debug, Default)]
pub struct ExpressionTree {
    pub nodes: Vec<ExprTreeNode>,
    pub root: usize,
}

#[derive(Clone, Debug)]
pub struct ExprTreeNode {
    /// Operation head, e.g. `v(2)`, `oplus`, `eta(1,2)`.
    pub op: String,
    pub children: Vec<usize>,
}

impl ExpressionTree {
    /// Leaf node ids, leftmost first; leaf `i` is vertex `i + 1`.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            let node = &self.nodes[u];
            if node.children.is_empty() {
                out.push(u);
            }
            stack.extend(node.children.iter().rev());
        }
        out
    }

    fn push(&mut self, op: String, children: Vec<usize>) -> usize {
        self.nodes.push(ExprTreeNode { op, children });
        self.nodes.len() - 1
    }

    fn push_cw(&mut self, node: &CwNode) -> usize {
        match node {
            CwNode::Leaf(a) => self.push(format!("v({a})"), vec![]),
            CwNode::Union(l, r) => {
                let l = self.push_cw(l);
                let r = self.push_cw(r);
                self.push("oplus".into(), vec![l, r])
            }
            CwNode::AddEdges(a, b, c) => {
                let c = self.push_cw(c);
                self.push(format!("eta({a},{b})"), vec![c])
            }
            CwNode::Relabel(a, b, c) => {
                let c = self.push_cw(c);
                self.push(format!("rho({a},{b})"), vec![c])
            }
        }
    }

    fn push_nlc(&mut self, node: &NlcNode) -> usize {
        match node {
            NlcNode::Leaf(a) => self.push(format!("v({a})"), vec![]),
            NlcNode::Join(s, l, r) => {
                let l = self.push_nlc(l);
                let r = self.push_nlc(r);
                self.push(format!("times({})", parse::pairs_to_string(s)), vec![l, r])
            }
            NlcNode::Relabel(m, c) => {
                let c = self.push_nlc(c);
                self.push(format!("ren({})", parse::map_to_string(m)), vec![c])
            }
        }
    }
}

#[derive(Default)]
struct Builder {
    labels: Vec<Label>,
    edges: HashSet<(Vertex, Vertex)>,
}

impl Builder {
    fn eval_cw(&mut self, node: &CwNode) {
        let lo = self.labels.len();
        match node {
            CwNode::Leaf(a) => self.labels.push(*a),
            CwNode::Union(l, r) => {
                self.eval_cw(l);
                self.eval_cw(r);
            }
            CwNode::AddEdges(a, b, c) => {
                self.eval_cw(c);
                let hi = self.labels.len();
                for x in lo..hi {
                    if self.labels[x] != *a {
                        continue;
                    }
                    for y in lo..hi {
                        if self.labels[y] == *b {
                            self.edges.insert((x.min(y) + 1, x.max(y) + 1));
                        }
                    }
                }
            }
            CwNode::Relabel(a, b, c) => {
                self.eval_cw(c);
                for l in &mut self.labels[lo..] {
                    if *l == *a {
                        *l = *b;
                    }
                }
            }
        }
    }

    fn eval_nlc(&mut self, node: &NlcNode) {
        let lo = self.labels.len();
        match node {
            NlcNode::Leaf(a) => self.labels.push(*a),
            NlcNode::Join(s, l, r) => {
                self.eval_nlc(l);
                let mid = self.labels.len();
                self.eval_nlc(r);
                let hi = self.labels.len();
                for x in lo..mid {
                    for y in mid..hi {
                        if s.contains(self.labels[x], self.labels[y]) {
                            self.edges.insert((x + 1, y + 1));
                        }
                    }
                }
            }
            NlcNode::Relabel(m, c) => {
                self.eval_nlc(c);
                for l in &mut self.labels[lo..] {
                    *l = m.apply(*l);
                }
            }
        }
    }

    fn finish(self, k: usize) -> LabeledGraph {
        let n = self.labels.len();
        let graph = Graph::new(n, self.edges).expect("expression evaluation yields a simple graph");
        LabeledGraph::new(graph, k, self.labels).expect("labels were validated against k")
    }
}

/// Mask with the lowest `k` bits set.
#[inline]
pub fn full_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// Labels (1-based) of the set bits of a mask, ascending.
pub fn bits(mut mask: u32) -> impl Iterator<Item = Label> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i + 1)
        }
    })
}

/// Label pairs of a relation, as a sorted set.
pub fn relation_pairs(s: &JoinRelation) -> BTreeSet<(Label, Label)> {
    s.pairs().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_expr() -> CwExpr {
        CwExpr::new(
            CwNode::add_edges(1, 2, CwNode::union(CwNode::Leaf(1), CwNode::Leaf(2))),
            None,
        )
        .unwrap()
    }

    #[test]
    fn eval_k2() {
        let g = k2_expr().eval();
        assert_eq!(g.graph().vertex_count(), 2);
        assert_eq!(g.graph().edges(), &[(1, 2)]);
        assert_eq!(g.labels(), &[1, 2]);
        assert_eq!(g.k(), 2);
    }

    #[test]
    fn eval_single_vertex() {
        let g = CwExpr::new(CwNode::Leaf(3), None).unwrap().eval();
        assert_eq!(g.graph().vertex_count(), 1);
        assert_eq!(g.graph().edge_count(), 0);
        assert_eq!(g.label(1), 3);
    }

    #[test]
    fn eval_path_four_by_hand() {
        // rho(3->2) then rho(2->1) on P_3's labels (1,2,3) gives (1,1,2);
        // the new vertex 4 is labeled 3 and eta(2,3) links it to vertex 3 only.
        let p3 = CwNode::add_edges(
            2,
            3,
            CwNode::union(
                CwNode::add_edges(1, 2, CwNode::union(CwNode::Leaf(1), CwNode::Leaf(2))),
                CwNode::Leaf(3),
            ),
        );
        let p4 = CwNode::add_edges(
            2,
            3,
            CwNode::union(CwNode::relabel(3, 2, CwNode::relabel(2, 1, p3)), CwNode::Leaf(3)),
        );
        let g = CwExpr::new(p4, None).unwrap().eval();
        assert_eq!(g.graph().edges(), &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(g.labels(), &[1, 1, 2, 3]);
    }

    #[test]
    fn rejects_equal_labels() {
        assert!(CwExpr::new(CwNode::add_edges(1, 1, CwNode::Leaf(1)), None).is_err());
        assert!(CwExpr::new(CwNode::relabel(2, 2, CwNode::Leaf(1)), None).is_err());
        assert!(CwExpr::new(CwNode::Leaf(3), Some(2)).is_err());
    }

    #[test]
    fn nlc_join_is_directional() {
        let s = JoinRelation::from_pairs(2, [(2, 1)]).unwrap();
        let x = NlcExpr::new(NlcNode::join(s.clone(), NlcNode::Leaf(1), NlcNode::Leaf(2)), 2).unwrap();
        assert_eq!(x.eval().graph().edge_count(), 0);
        let y = NlcExpr::new(NlcNode::join(s, NlcNode::Leaf(2), NlcNode::Leaf(1)), 2).unwrap();
        assert_eq!(y.eval().graph().edges(), &[(1, 2)]);
    }

    #[test]
    fn expression_tree_leaves_match_vertices() {
        let x = k2_expr();
        let t = x.expression_tree();
        let leaves = t.leaves();
        assert_eq!(leaves.len(), x.eval().graph().vertex_count());
        assert_eq!(t.nodes[leaves[0]].op, "v(1)");
        assert_eq!(t.nodes[leaves[1]].op, "v(2)");
        assert_eq!(t.nodes[t.root].op, "eta(1,2)");
    }

    #[test]
    fn relation_helpers() {
        let s = JoinRelation::from_pairs(3, [(1, 2), (1, 3), (2, 2)]).unwrap();
        assert!(s.covers(0b001, 0b110));
        assert!(!s.covers(0b011, 0b110));
        assert!(s.meets(0b010, 0b010));
        assert!(!s.meets(0b100, 0b111));
        assert_eq!(s.complement().complement(), s);
        assert_eq!(s.complement().pairs().count(), 6);
    }
}
