//! Standard expressions for cliques and paths.
//!
//! Clique-width: `K_n = eta(1,2, rho(2->1, K_{n-1}) + v(2))` and
//! `P_n = eta(2,3, rho(3->2, rho(2->1, P_{n-1})) + v(3))`.
//! NLC-width: `K_n = K_{n-1} x_{(1,1)} v(1)` and
//! `P_n = ren{1:1, 2:1, 3:2}(P_{n-1}) x_{(2,3)} v(3)`.

use super::{Calculus, CwExpr, CwNode, JoinRelation, NlcExpr, NlcNode, Relabeling, WidthExpr};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Clique,
    Path,
}

/// Expression for `K_n` or `P_n`, `n >= 1`.
///
/// The recursions start at `K_2` / `P_3`; smaller members are `v(1)` and the
/// single edge `v(1) - v(2)`.
pub fn gen_family(family: Family, n: usize, calculus: Calculus) -> Result<WidthExpr> {
    if n == 0 {
        return Err(Error::input("family size must be at least 1"));
    }
    Ok(match calculus {
        Calculus::CliqueWidth => WidthExpr::Cw(cw_family(family, n)),
        Calculus::Nlc => WidthExpr::Nlc(nlc_family(family, n)),
    })
}

fn cw_edge() -> CwNode {
    CwNode::add_edges(1, 2, CwNode::union(CwNode::Leaf(1), CwNode::Leaf(2)))
}

fn cw_family(family: Family, n: usize) -> CwExpr {
    let (node, k) = match (family, n) {
        (_, 1) => (CwNode::Leaf(1), 1),
        (Family::Clique, _) => {
            let mut x = cw_edge();
            for _ in 3..=n {
                x = CwNode::add_edges(1, 2, CwNode::union(CwNode::relabel(2, 1, x), CwNode::Leaf(2)));
            }
            (x, 2)
        }
        (Family::Path, 2) => (cw_edge(), 2),
        (Family::Path, _) => {
            let mut x = CwNode::add_edges(2, 3, CwNode::union(cw_edge(), CwNode::Leaf(3)));
            for _ in 4..=n {
                x = CwNode::add_edges(
                    2,
                    3,
                    CwNode::union(CwNode::relabel(3, 2, CwNode::relabel(2, 1, x)), CwNode::Leaf(3)),
                );
            }
            (x, 3)
        }
    };
    CwExpr::new(node, Some(k)).expect("family expressions are well formed")
}

fn nlc_family(family: Family, n: usize) -> NlcExpr {
    let (node, k) = match (family, n) {
        (_, 1) => (NlcNode::Leaf(1), 1),
        (Family::Clique, _) => {
            let s = JoinRelation::from_pairs(1, [(1, 1)]).expect("valid pair");
            let mut x = NlcNode::Leaf(1);
            for _ in 2..=n {
                x = NlcNode::join(s.clone(), x, NlcNode::Leaf(1));
            }
            (x, 1)
        }
        (Family::Path, 2) => {
            let s = JoinRelation::from_pairs(2, [(1, 2)]).expect("valid pair");
            (NlcNode::join(s, NlcNode::Leaf(1), NlcNode::Leaf(2)), 2)
        }
        (Family::Path, _) => {
            let s12 = JoinRelation::from_pairs(3, [(1, 2)]).expect("valid pair");
            let s23 = JoinRelation::from_pairs(3, [(2, 3)]).expect("valid pair");
            let shift = Relabeling::from_entries(3, [(1, 1), (2, 1), (3, 2)]).expect("valid map");
            let mut x = NlcNode::join(
                s23.clone(),
                NlcNode::join(s12, NlcNode::Leaf(1), NlcNode::Leaf(2)),
                NlcNode::Leaf(3),
            );
            for _ in 4..=n {
                x = NlcNode::join(s23.clone(), NlcNode::relabel(shift.clone(), x), NlcNode::Leaf(3));
            }
            (x, 3)
        }
    };
    NlcExpr::new(node, k).expect("family expressions are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_cw, parse_nlc};
    use crate::graph::Graph;

    #[test]
    fn nlc_triangle_shape() {
        let x = gen_family(Family::Clique, 3, Calculus::Nlc).unwrap();
        let expected = parse_nlc("times({(1,1)},times({(1,1)},v(1),v(1)),v(1))").unwrap();
        assert_eq!(x, WidthExpr::Nlc(expected));
    }

    #[test]
    fn cw_p3_shape() {
        let x = gen_family(Family::Path, 3, Calculus::CliqueWidth).unwrap();
        let expected = parse_cw("eta(2,3,oplus(eta(1,2,oplus(v(1),v(2))),v(3)))").unwrap();
        assert_eq!(x, WidthExpr::Cw(expected));
    }

    #[test]
    fn k5_has_all_edges() {
        let g = gen_family(Family::Clique, 5, Calculus::CliqueWidth).unwrap().eval();
        assert_eq!(g.graph(), &Graph::complete(5).unwrap());
    }

    #[test]
    fn small_members() {
        for calc in [Calculus::CliqueWidth, Calculus::Nlc] {
            for fam in [Family::Clique, Family::Path] {
                assert_eq!(gen_family(fam, 1, calc).unwrap().eval().graph(), &Graph::empty(1).unwrap());
                assert_eq!(gen_family(fam, 2, calc).unwrap().eval().graph(), &Graph::path(2).unwrap());
            }
            assert!(gen_family(Family::Path, 0, calc).is_err());
        }
    }

    #[test]
    fn families_evaluate_exactly() {
        for n in 1..=50 {
            for calc in [Calculus::CliqueWidth, Calculus::Nlc] {
                let k = gen_family(Family::Clique, n, calc).unwrap().eval();
                assert_eq!(k.graph(), &Graph::complete(n).unwrap(), "K_{n} {calc}");
                let p = gen_family(Family::Path, n, calc).unwrap().eval();
                assert_eq!(p.graph(), &Graph::path(n).unwrap(), "P_{n} {calc}");
            }
        }
    }
}
