//! `alpha` and `omega` over tables indexed by label sets.

use super::{fold_cw, fold_nlc};
use crate::expr::{label_bit, CwExpr, CwNode, NlcExpr, NlcNode, Relabeling};

/// Optional value per label set `L`, indexed by the mask of `L`. The empty
/// set always maps to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelSetTable {
    k: usize,
    values: Vec<Option<u32>>,
}

impl LabelSetTable {
    fn empty(k: usize) -> Self {
        let mut values = vec![None; 1 << k];
        values[0] = Some(0);
        LabelSetTable { k, values }
    }

    fn leaf(k: usize, a: usize) -> Self {
        let mut t = Self::empty(k);
        t.values[label_bit(a) as usize] = Some(1);
        t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, set: u32) -> Option<usize> {
        self.values[set as usize].map(|v| v as usize)
    }

    /// Present entries for nonempty label sets.
    pub fn entries(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .filter_map(|(set, v)| v.map(|v| (set as u32, v as usize)))
    }

    pub fn best(&self) -> usize {
        self.values.iter().flatten().copied().max().unwrap_or(0) as usize
    }

    fn raise(&mut self, set: u32, value: u32) {
        let slot = &mut self.values[set as usize];
        *slot = Some(slot.map_or(value, |v| v.max(value)));
    }

    /// `c[L1 | L2] = max a[L1] + b[L2]` over the pairs accepted by `allow`.
    fn combine(&self, other: &Self, allow: impl Fn(u32, u32) -> bool) -> Self {
        let mut out = Self::empty(self.k);
        for (l1, a) in self.values.iter().enumerate() {
            let Some(a) = a else { continue };
            for (l2, b) in other.values.iter().enumerate() {
                let Some(b) = b else { continue };
                if allow(l1 as u32, l2 as u32) {
                    out.raise((l1 | l2) as u32, a + b);
                }
            }
        }
        out.check_size();
        out
    }

    /// Maximum over all preimages under `r`.
    fn relabel(&self, r: &Relabeling) -> Self {
        let mut out = Self::empty(self.k);
        for (set, v) in self.values.iter().enumerate() {
            if let Some(v) = v {
                out.raise(r.apply_set(set as u32), *v);
            }
        }
        out
    }

    fn check_size(&self) {
        assert!(self.entries().count() < 1 << self.k, "label-set table exceeds 2^k - 1 entries");
    }
}

pub(super) fn alpha_cw(x: &CwExpr) -> usize {
    let k = x.k();
    fold_cw(x, |node, children: Vec<LabelSetTable>| match node {
        CwNode::Leaf(a) => LabelSetTable::leaf(k, *a),
        CwNode::Union(..) => children[0].combine(&children[1], |_, _| true),
        CwNode::AddEdges(a, b, _) => {
            let both = label_bit(*a) | label_bit(*b);
            let mut t = children.into_iter().next().expect("one child");
            for set in 0..1u32 << k {
                if set & both == both {
                    t.values[set as usize] = None;
                }
            }
            t
        }
        CwNode::Relabel(a, b, _) => {
            children[0].relabel(&Relabeling::single(k, *a, *b).expect("labels are in range"))
        }
    })
    .best()
}

pub(super) fn alpha_nlc(x: &NlcExpr) -> usize {
    let k = x.k();
    fold_nlc(x, |node, children: Vec<LabelSetTable>| match node {
        NlcNode::Leaf(a) => LabelSetTable::leaf(k, *a),
        NlcNode::Join(s, ..) => children[0].combine(&children[1], |l1, l2| !s.meets(l1, l2)),
        NlcNode::Relabel(r, _) => children[0].relabel(r),
    })
    .best()
}

/// A clique of the joined graph lies in one side or takes `L1` from the left
/// and `L2` from the right with every pair of `L1 x L2` in `S`.
pub(super) fn omega_nlc(x: &NlcExpr) -> usize {
    let k = x.k();
    fold_nlc(x, |node, children: Vec<LabelSetTable>| match node {
        NlcNode::Leaf(a) => LabelSetTable::leaf(k, *a),
        NlcNode::Join(s, ..) => {
            children[0].combine(&children[1], |l1, l2| l1 == 0 || l2 == 0 || s.covers(l1, l2))
        }
        NlcNode::Relabel(r, _) => children[0].relabel(r),
    })
    .best()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_cw, parse_nlc};

    #[test]
    fn relabel_keeps_the_preimage_with_both_labels() {
        // Two non-adjacent vertices labelled 1 and 2 merged onto label 2.
        let x = parse_cw("eta(2,3,oplus(rho(1,2,oplus(v(1),v(2))),v(3)))").unwrap();
        assert_eq!(alpha_cw(&x), 2);
    }

    #[test]
    fn join_needs_every_cross_pair() {
        // S = {(1,2),(2,1)} joins the left 1 to the right 2 and the left 2 to
        // the right 1, but not the two 1s, so there is no triangle.
        let x = parse_nlc("times({(1,2);(2,1)},times({(1,2)},v(1),v(2)),v(1))").unwrap();
        assert_eq!(x.eval().graph().edge_count(), 2);
        assert_eq!(omega_nlc(&x), 2);
        assert_eq!(alpha_nlc(&x), 2);
    }

    #[test]
    fn table_accessors() {
        let t = LabelSetTable::leaf(2, 2);
        assert_eq!(t.get(0), Some(0));
        assert_eq!(t.get(0b10), Some(1));
        assert_eq!(t.get(0b01), None);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0b10, 1)]);
        assert_eq!(t.k(), 2);
    }
}
