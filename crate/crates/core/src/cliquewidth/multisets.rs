//! `chi` and `theta` over families of multisets of label sets.
//!
//! A multiset lists the label sets of the classes of a partition of the
//! vertices into independent sets (for `chi`) or cliques (for `theta`). At a
//! union or join, each left class may absorb at most one right class.

use std::collections::HashSet;
use std::hash::Hash;

use super::{fold_cw, fold_nlc};
use crate::expr::{label_bit, CwExpr, CwNode, JoinRelation, NlcExpr, NlcNode, Relabeling};

/// Distinct canonical multisets, each a sorted list of label-set masks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultisetFamily {
    members: HashSet<Vec<u32>>,
}

impl MultisetFamily {
    fn leaf(a: usize) -> Self {
        MultisetFamily {
            members: HashSet::from([vec![label_bit(a)]]),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.members.iter().map(Vec::as_slice)
    }

    /// Size of a smallest multiset.
    pub fn min_size(&self) -> Option<usize> {
        self.members.iter().map(Vec::len).min()
    }

    fn relabel(self, r: &Relabeling) -> Self {
        let members = self
            .members
            .into_iter()
            .map(|m| {
                let mut m: Vec<u32> = m.into_iter().map(|l| r.apply_set(l)).collect();
                m.sort_unstable();
                m
            })
            .collect();
        MultisetFamily { members }
    }

    fn combine(&self, other: &Self, merge: impl Fn(u32, u32) -> bool) -> Self {
        let members = combine_families(&self.members, &other.members, &|a: &u32, b: &u32| {
            merge(*a, *b).then_some(a | b)
        });
        MultisetFamily { members }
    }

    /// Asserts `|F| <= (n + 1)^(2^k - 1)` for `n` vertices.
    fn check_size(&self, n: usize, k: usize) {
        let bound = u32::try_from((1u64 << k) - 1)
            .ok()
            .and_then(|e| (n as u64 + 1).checked_pow(e));
        if let Some(bound) = bound {
            assert!(self.len() as u64 <= bound, "multiset family exceeds (n+1)^(2^k-1)");
        }
    }
}

/// Every multiset reachable from a left and a right multiset by merging
/// disjoint left/right class pairs accepted by `merge`.
pub(super) fn combine_families<C: Clone + Ord + Hash>(
    left: &HashSet<Vec<C>>,
    right: &HashSet<Vec<C>>,
    merge: &impl Fn(&C, &C) -> Option<C>,
) -> HashSet<Vec<C>> {
    let mut out = HashSet::new();
    for a in left {
        for b in right {
            let mut used = vec![false; b.len()];
            let mut current = Vec::with_capacity(a.len() + b.len());
            merge_classes(a, b, 0, &mut used, &mut current, merge, &mut out);
        }
    }
    out
}

/// Decides the fate of `a[i]`: kept alone or merged with one unused class of
/// `b`. Once `a` is exhausted the unused classes of `b` are appended.
fn merge_classes<C: Clone + Ord + Hash>(
    a: &[C],
    b: &[C],
    i: usize,
    used: &mut [bool],
    current: &mut Vec<C>,
    merge: &impl Fn(&C, &C) -> Option<C>,
    out: &mut HashSet<Vec<C>>,
) {
    if i == a.len() {
        let mut m = current.clone();
        m.extend(b.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(c, _)| c.clone()));
        m.sort_unstable();
        out.insert(m);
        return;
    }
    current.push(a[i].clone());
    merge_classes(a, b, i + 1, used, current, merge, out);
    current.pop();
    for j in 0..b.len() {
        // Equal classes of `b` are interchangeable; try only the first unused one.
        if used[j] || (j > 0 && b[j] == b[j - 1] && !used[j - 1]) {
            continue;
        }
        if let Some(merged) = merge(&a[i], &b[j]) {
            used[j] = true;
            current.push(merged);
            merge_classes(a, b, i + 1, used, current, merge, out);
            current.pop();
            used[j] = false;
        }
    }
}

/// Independent classes may merge freely at a union; `eta(a,b)` drops every
/// multiset with a class holding both `a` and `b`.
pub(super) fn chi_cw(x: &CwExpr) -> usize {
    let k = x.k();
    let (family, _) = fold_cw(x, |node, children: Vec<(MultisetFamily, usize)>| {
        let mut children = children.into_iter();
        let (family, n) = match node {
            CwNode::Leaf(a) => (MultisetFamily::leaf(*a), 1),
            CwNode::Union(..) => {
                let (l, nl) = children.next().expect("left");
                let (r, nr) = children.next().expect("right");
                (l.combine(&r, |_, _| true), nl + nr)
            }
            CwNode::AddEdges(a, b, _) => {
                let (mut f, n) = children.next().expect("one child");
                let both = label_bit(*a) | label_bit(*b);
                f.members.retain(|m| m.iter().all(|&l| l & both != both));
                (f, n)
            }
            CwNode::Relabel(a, b, _) => {
                let (f, n) = children.next().expect("one child");
                (f.relabel(&Relabeling::single(k, *a, *b).expect("labels are in range")), n)
            }
        };
        family.check_size(n, k);
        (family, n)
    });
    family.min_size().expect("some coloring exists")
}

/// Classes merge at `x_S` only when no pair of `L' x L''` is in `S`.
pub(super) fn chi_nlc(x: &NlcExpr) -> usize {
    nlc_family(x, |s, l1, l2| !s.meets(l1, l2))
        .min_size()
        .expect("some coloring exists")
}

/// Cliques merge at `x_S` only when every pair of `L' x L''` is in `S`.
pub(super) fn theta_nlc(x: &NlcExpr) -> usize {
    nlc_family(x, |s, l1, l2| s.covers(l1, l2))
        .min_size()
        .expect("some clique cover exists")
}

fn nlc_family(x: &NlcExpr, merge: impl Fn(&JoinRelation, u32, u32) -> bool) -> MultisetFamily {
    let k = x.k();
    let (family, _) = fold_nlc(x, |node, children: Vec<(MultisetFamily, usize)>| {
        let mut children = children.into_iter();
        let (family, n) = match node {
            NlcNode::Leaf(a) => (MultisetFamily::leaf(*a), 1),
            NlcNode::Join(s, ..) => {
                let (l, nl) = children.next().expect("left");
                let (r, nr) = children.next().expect("right");
                (l.combine(&r, |a, b| merge(s, a, b)), nl + nr)
            }
            NlcNode::Relabel(r, _) => {
                let (f, n) = children.next().expect("one child");
                (f.relabel(r), n)
            }
        };
        family.check_size(n, k);
        (family, n)
    });
    family
}
