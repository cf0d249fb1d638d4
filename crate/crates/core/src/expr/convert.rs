//! Translations between the two calculi and the NLC complement.

use super::{bits, label_bit, CwExpr, CwNode, JoinRelation, NlcExpr, NlcNode, Relabeling};
use crate::error::{Error, Result};
use crate::graph::Label;

/// Converts a clique-width expression in join-normal form to an NLC-width
/// expression over the same alphabet with the same `val(X)`.
///
/// Join-normal form: every `eta` sits in a chain of `eta`/`rho` nodes directly
/// above a union, and each `eta` of that chain only adds edges across the two
/// union operands. A union together with the edge insertions stacked on it
/// becomes one join whose relation holds the collected label pairs, traced
/// back through any relabelings in between. Each `rho(a,b)` becomes a
/// relabeling with `a -> b` and the identity elsewhere.
pub fn cw_to_nlc(x: &CwExpr) -> Result<NlcExpr> {
    let mut offset = 0;
    let (root, _) = convert(x.root(), x.k(), &mut offset)?;
    NlcExpr::new(root, x.k())
}

/// Returns the converted node and its live label mask. `offset` counts the
/// leaves to the left, so errors can point at a vertex.
fn convert(node: &CwNode, k: usize, offset: &mut usize) -> Result<(NlcNode, u32)> {
    match node {
        CwNode::Leaf(a) => {
            *offset += 1;
            Ok((NlcNode::Leaf(*a), label_bit(*a)))
        }
        CwNode::Union(l, r) => {
            let (l, ll) = convert(l, k, offset)?;
            let (r, rl) = convert(r, k, offset)?;
            Ok((NlcNode::join(JoinRelation::empty(k), l, r), ll | rl))
        }
        CwNode::Relabel(a, b, c) => {
            let (c, live) = convert(c, k, offset)?;
            let m = Relabeling::single(k, *a, *b)?;
            let live = m.apply_set(live);
            Ok((NlcNode::relabel(m, c), live))
        }
        CwNode::AddEdges(..) => convert_chain(node, k, offset),
    }
}

fn convert_chain(top: &CwNode, k: usize, offset: &mut usize) -> Result<(NlcNode, u32)> {
    let first_vertex = *offset + 1;
    let mut chain = Vec::new();
    let mut cur = top;
    let (left, right) = loop {
        match cur {
            CwNode::AddEdges(_, _, c) | CwNode::Relabel(_, _, c) => {
                chain.push(cur);
                cur = c;
            }
            CwNode::Union(l, r) => break (l, r),
            CwNode::Leaf(_) => {
                return Err(Error::NotJoinNormalForm(format!(
                    "{} over the subexpression starting at vertex {first_vertex} does not reach a union",
                    head(top)
                )))
            }
        }
    };
    let (left, left_live) = convert(left, k, offset)?;
    let (right, right_live) = convert(right, k, offset)?;

    // `trace` maps labels at the union to the current labels while walking
    // the chain bottom-up.
    let mut trace = Relabeling::identity(k);
    let mut pairs: Vec<(Label, Label)> = Vec::new();
    let mut relabels = Vec::new();
    for &op in chain.iter().rev() {
        match op {
            CwNode::Relabel(a, b, _) => {
                let step = Relabeling::single(k, *a, *b)?;
                trace = Relabeling::from_entries(k, (1..=k).map(|p| (p, step.apply(trace.apply(p)))))?;
                relabels.push(step);
            }
            CwNode::AddEdges(a, b, _) => {
                let hits = |p: Label, q: Label| {
                    let (x, y) = (trace.apply(p), trace.apply(q));
                    (x == *a && y == *b) || (x == *b && y == *a)
                };
                for (side, live) in [("left", left_live), ("right", right_live)] {
                    if bits(live).any(|p| bits(live).any(|q| hits(p, q))) {
                        return Err(Error::NotJoinNormalForm(format!(
                            "eta({a},{b}) over the subexpression starting at vertex {first_vertex} \
                             adds edges inside the {side} union operand"
                        )));
                    }
                }
                for p in bits(left_live) {
                    for q in bits(right_live) {
                        if hits(p, q) {
                            pairs.push((p, q));
                        }
                    }
                }
            }
            _ => unreachable!("chain holds only eta and rho nodes"),
        }
    }
    let mut node = NlcNode::join(JoinRelation::from_pairs(k, pairs)?, left, right);
    for m in relabels {
        node = NlcNode::relabel(m, node);
    }
    Ok((node, trace.apply_set(left_live | right_live)))
}

fn head(node: &CwNode) -> String {
    match node {
        CwNode::Leaf(a) => format!("v({a})"),
        CwNode::Union(..) => "oplus".into(),
        CwNode::AddEdges(a, b, _) => format!("eta({a},{b})"),
        CwNode::Relabel(a, b, _) => format!("rho({a},{b})"),
    }
}

/// NLC expression for the edge complement of `val(x)`, labels unchanged:
/// every join relation `S` is replaced by `[k]^2 \ S`.
pub fn nlc_complement(x: &NlcExpr) -> NlcExpr {
    fn go(node: &NlcNode) -> NlcNode {
        match node {
            NlcNode::Leaf(a) => NlcNode::Leaf(*a),
            NlcNode::Join(s, l, r) => NlcNode::join(s.complement(), go(l), go(r)),
            NlcNode::Relabel(m, c) => NlcNode::relabel(m.clone(), go(c)),
        }
    }
    NlcExpr::new(go(x.root()), x.k()).expect("complement keeps the alphabet")
}
