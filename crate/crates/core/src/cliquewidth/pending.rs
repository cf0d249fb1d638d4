//! Clique-width `omega` and `theta`.
//!
//! Edges of a clique-width expression appear only at `eta` nodes, after the
//! union that brought the endpoints together. A vertex set `U` can still grow
//! into a clique if every non-adjacent pair in it has distinct labels. Such a
//! set is summarised by its label set `L` and the set `P` of label pairs
//! `{a,b}` with some non-adjacent pair of `U` labelled `a` and `b`:
//!
//! - a union of `U1` and `U2` needs `L1` and `L2` disjoint and puts every
//!   pair of `L1 x L2` into `P`;
//! - `eta(a,b)` removes `{a,b}` from `P`;
//! - `rho(a->b)` with `{a,b}` in `P` makes `U` useless, and otherwise renames
//!   `L` and `P`;
//! - `U` is a clique exactly when `P` is empty.

use std::collections::{HashMap, HashSet};

use super::multisets::combine_families;
use super::{fold_cw, PENDING_MAX_K};
use crate::expr::{bits, label_bit, CwExpr, CwNode};
use crate::graph::Label;

/// Label set and pending pairs of a candidate clique.
type Candidate = (u32, u64);

fn pair_bit(a: Label, b: Label) -> u64 {
    let (lo, hi) = (a.min(b), a.max(b));
    debug_assert!(lo < hi && hi <= PENDING_MAX_K);
    1 << ((hi - 1) * (hi - 2) / 2 + (lo - 1))
}

fn cross_pairs(l1: u32, l2: u32) -> u64 {
    bits(l1)
        .flat_map(|a| bits(l2).map(move |b| pair_bit(a, b)))
        .fold(0, |p, bit| p | bit)
}

fn union(x: Candidate, y: Candidate) -> Option<Candidate> {
    (x.0 & y.0 == 0).then(|| (x.0 | y.0, x.1 | y.1 | cross_pairs(x.0, y.0)))
}

fn relabel(c: Candidate, a: Label, b: Label) -> Option<Candidate> {
    let (labels, pending) = c;
    if labels & label_bit(a) == 0 {
        return Some(c);
    }
    if pending & pair_bit(a, b) != 0 {
        return None;
    }
    let rename = |x: Label| if x == a { b } else { x };
    let mut moved = 0;
    for hi in 2..=PENDING_MAX_K {
        for lo in 1..hi {
            if pending & pair_bit(lo, hi) != 0 {
                moved |= pair_bit(rename(lo), rename(hi));
            }
        }
    }
    Some(((labels & !label_bit(a)) | label_bit(b), moved))
}

pub(super) fn omega_cw(x: &CwExpr) -> usize {
    let table = fold_cw(x, |node, children: Vec<HashMap<Candidate, usize>>| {
        let mut children = children.into_iter();
        let mut out: HashMap<Candidate, usize> = HashMap::new();
        let mut raise = |c: Candidate, v: usize| {
            let slot = out.entry(c).or_insert(v);
            *slot = (*slot).max(v);
        };
        match node {
            CwNode::Leaf(a) => {
                raise((0, 0), 0);
                raise((label_bit(*a), 0), 1);
            }
            CwNode::Union(..) => {
                let l = children.next().expect("left");
                let r = children.next().expect("right");
                for (&x, &a) in &l {
                    for (&y, &b) in &r {
                        if let Some(c) = union(x, y) {
                            raise(c, a + b);
                        }
                    }
                }
            }
            CwNode::AddEdges(a, b, _) => {
                let clear = !pair_bit(*a, *b);
                for ((labels, pending), v) in children.next().expect("one child") {
                    raise((labels, pending & clear), v);
                }
            }
            CwNode::Relabel(a, b, _) => {
                for (c, v) in children.next().expect("one child") {
                    if let Some(c) = relabel(c, *a, *b) {
                        raise(c, v);
                    }
                }
            }
        }
        out
    });
    table
        .into_iter()
        .filter(|&((_, pending), _)| pending == 0)
        .map(|(_, v)| v)
        .max()
        .unwrap_or(0)
}

/// Multisets of candidates covering all vertices. At a union, left and right
/// candidates merge pairwise as above.
pub(super) fn theta_cw(x: &CwExpr) -> usize {
    let family = fold_cw(x, |node, children: Vec<HashSet<Vec<Candidate>>>| {
        let mut children = children.into_iter();
        match node {
            CwNode::Leaf(a) => HashSet::from([vec![(label_bit(*a), 0)]]),
            CwNode::Union(..) => {
                let l = children.next().expect("left");
                let r = children.next().expect("right");
                combine_families(&l, &r, &|x: &Candidate, y: &Candidate| union(*x, *y))
            }
            CwNode::AddEdges(a, b, _) => {
                let clear = !pair_bit(*a, *b);
                children
                    .next()
                    .expect("one child")
                    .into_iter()
                    .map(|m| {
                        let mut m: Vec<Candidate> = m.into_iter().map(|(l, p)| (l, p & clear)).collect();
                        m.sort_unstable();
                        m
                    })
                    .collect()
            }
            CwNode::Relabel(a, b, _) => children
                .next()
                .expect("one child")
                .into_iter()
                .filter_map(|m| {
                    let mut m: Vec<Candidate> = m.into_iter().map(|c| relabel(c, *a, *b)).collect::<Option<_>>()?;
                    m.sort_unstable();
                    Some(m)
                })
                .collect(),
        }
    });
    family
        .into_iter()
        .filter(|m| m.iter().all(|&(_, pending)| pending == 0))
        .map(|m| m.len())
        .min()
        .expect("the singleton cover survives")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_bits_are_distinct() {
        let mut seen = 0u64;
        for hi in 2..=PENDING_MAX_K {
            for lo in 1..hi {
                let bit = pair_bit(lo, hi);
                assert_eq!(bit, pair_bit(hi, lo));
                assert_eq!(seen & bit, 0);
                seen |= bit;
            }
        }
        assert_eq!(seen.count_ones() as usize, PENDING_MAX_K * (PENDING_MAX_K - 1) / 2);
    }

    #[test]
    fn relabel_renames_pending_pairs() {
        let c = (0b0111, pair_bit(1, 3));
        assert_eq!(relabel(c, 3, 2), Some((0b0011, pair_bit(1, 2))));
        assert_eq!(relabel(c, 1, 3), None);
        assert_eq!(relabel((0b0010, 0), 1, 3), Some((0b0010, 0)));
    }
}
