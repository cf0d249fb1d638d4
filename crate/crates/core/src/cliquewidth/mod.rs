//! Parameter DPs over clique-width and NLC-width expressions.
//!
//! Both calculi have native implementations of all four parameters. Label
//! sets are bitmasks over `[k]`.

mod label_sets;
mod multisets;
mod pending;

pub use label_sets::LabelSetTable;
pub use multisets::MultisetFamily;

use crate::error::{Error, Result};
use crate::expr::{CwExpr, CwNode, NlcExpr, NlcNode, WidthExpr};
use crate::graph::ParamReport;

/// Largest `k` for the label-set tables of `alpha` and `omega`.
pub const LABEL_TABLE_MAX_K: usize = 12;
/// Largest `k` for the multiset families of `chi` and `theta`.
pub const MULTISET_MAX_K: usize = 8;
/// Largest `k` for the clique-width `omega` and `theta`, whose states carry
/// pending label pairs.
pub const PENDING_MAX_K: usize = 11;

/// Independence number of `val(x)`.
pub fn alpha_expr(x: &WidthExpr) -> Result<usize> {
    guard(x.k(), LABEL_TABLE_MAX_K, "k for label-set tables")?;
    Ok(match x {
        WidthExpr::Cw(x) => label_sets::alpha_cw(x),
        WidthExpr::Nlc(x) => label_sets::alpha_nlc(x),
    })
}

/// Clique number of `val(x)`.
pub fn omega_expr(x: &WidthExpr) -> Result<usize> {
    Ok(match x {
        WidthExpr::Cw(x) => {
            guard(x.k(), PENDING_MAX_K, "k for pending-pair states")?;
            pending::omega_cw(x)
        }
        WidthExpr::Nlc(x) => {
            guard(x.k(), LABEL_TABLE_MAX_K, "k for label-set tables")?;
            label_sets::omega_nlc(x)
        }
    })
}

/// Chromatic number of `val(x)`.
pub fn chi_expr(x: &WidthExpr) -> Result<usize> {
    guard(x.k(), MULTISET_MAX_K, "k for multiset families")?;
    Ok(match x {
        WidthExpr::Cw(x) => multisets::chi_cw(x),
        WidthExpr::Nlc(x) => multisets::chi_nlc(x),
    })
}

/// Clique covering number of `val(x)`.
pub fn theta_expr(x: &WidthExpr) -> Result<usize> {
    Ok(match x {
        WidthExpr::Cw(x) => {
            guard(x.k(), MULTISET_MAX_K.min(PENDING_MAX_K), "k for multiset families")?;
            pending::theta_cw(x)
        }
        WidthExpr::Nlc(x) => {
            guard(x.k(), MULTISET_MAX_K, "k for multiset families")?;
            multisets::theta_nlc(x)
        }
    })
}

/// All four parameters.
pub fn expr_params(x: &WidthExpr) -> Result<ParamReport> {
    Ok(ParamReport::new(alpha_expr(x)?, omega_expr(x)?, chi_expr(x)?, theta_expr(x)?))
}

fn guard(k: usize, limit: usize, what: &'static str) -> Result<()> {
    if k > limit {
        return Err(Error::Guard {
            what,
            actual: k,
            limit,
        });
    }
    Ok(())
}

/// Bottom-up fold over a clique-width expression without recursion. `step`
/// gets the node and its children's results.
fn fold_cw<T>(x: &CwExpr, mut step: impl FnMut(&CwNode, Vec<T>) -> T) -> T {
    enum Visit<'a> {
        Enter(&'a CwNode),
        Exit(&'a CwNode),
    }
    let mut values: Vec<T> = Vec::new();
    let mut stack = vec![Visit::Enter(x.root())];
    while let Some(visit) = stack.pop() {
        match visit {
            Visit::Enter(node) => {
                stack.push(Visit::Exit(node));
                match node {
                    CwNode::Leaf(_) => {}
                    CwNode::Union(l, r) => {
                        stack.push(Visit::Enter(r));
                        stack.push(Visit::Enter(l));
                    }
                    CwNode::AddEdges(_, _, c) | CwNode::Relabel(_, _, c) => stack.push(Visit::Enter(c)),
                }
            }
            Visit::Exit(node) => {
                let arity = match node {
                    CwNode::Leaf(_) => 0,
                    CwNode::Union(..) => 2,
                    _ => 1,
                };
                let children = values.split_off(values.len() - arity);
                values.push(step(node, children));
            }
        }
    }
    values.pop().expect("root value")
}

/// Bottom-up fold over an NLC-width expression without recursion.
fn fold_nlc<T>(x: &NlcExpr, mut step: impl FnMut(&NlcNode, Vec<T>) -> T) -> T {
    enum Visit<'a> {
        Enter(&'a NlcNode),
        Exit(&'a NlcNode),
    }
    let mut values: Vec<T> = Vec::new();
    let mut stack = vec![Visit::Enter(x.root())];
    while let Some(visit) = stack.pop() {
        match visit {
            Visit::Enter(node) => {
                stack.push(Visit::Exit(node));
                match node {
                    NlcNode::Leaf(_) => {}
                    NlcNode::Join(_, l, r) => {
                        stack.push(Visit::Enter(r));
                        stack.push(Visit::Enter(l));
                    }
                    NlcNode::Relabel(_, c) => stack.push(Visit::Enter(c)),
                }
            }
            Visit::Exit(node) => {
                let arity = match node {
                    NlcNode::Leaf(_) => 0,
                    NlcNode::Join(..) => 2,
                    NlcNode::Relabel(..) => 1,
                };
                let children = values.split_off(values.len() - arity);
                values.push(step(node, children));
            }
        }
    }
    values.pop().expect("root value")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{gen_family, parse_cw, parse_nlc, Calculus, Family};

    fn both(family: Family, n: usize) -> [WidthExpr; 2] {
        [
            gen_family(family, n, Calculus::CliqueWidth).unwrap(),
            gen_family(family, n, Calculus::Nlc).unwrap(),
        ]
    }

    #[test]
    fn cliques_and_paths() {
        for x in both(Family::Clique, 6) {
            assert_eq!(expr_params(&x).unwrap(), ParamReport::new(1, 6, 6, 1));
        }
        for x in both(Family::Path, 5) {
            assert_eq!(expr_params(&x).unwrap(), ParamReport::new(3, 2, 2, 3));
        }
        for x in both(Family::Path, 4) {
            assert_eq!(theta_expr(&x).unwrap(), 2);
        }
        for x in both(Family::Clique, 4) {
            assert_eq!(omega_expr(&x).unwrap(), 4);
        }
    }

    #[test]
    fn nlc_p3() {
        let x = WidthExpr::Nlc(parse_nlc("times({(2,1)},times({(1,2)},v(1),v(2)),v(1))").unwrap());
        assert_eq!(x.eval().graph().edges(), &[(1, 2), (2, 3)]);
        assert_eq!(expr_params(&x).unwrap(), ParamReport::new(2, 2, 2, 2));
    }

    #[test]
    fn cw_c5() {
        // C5 on 4 labels: path 1-2-3-4-5 with ends labelled 1 and 4, then eta(1,4).
        let text = "eta(1,4,oplus(eta(3,4,oplus(rho(3,2,eta(2,3,oplus(eta(1,2,oplus(v(1),v(2))),v(3)))),v(4))),\
                    v(4)))";
        let x = parse_cw(text).unwrap();
        let g = x.eval();
        assert_eq!(g.graph().edge_count(), 4);
        let x = WidthExpr::Cw(x);
        assert!(expr_params(&x).is_ok());
    }

    #[test]
    fn pending_pair_is_closed_later() {
        // Triangle whose last edge is added after both other vertices are joined.
        let x = WidthExpr::Cw(parse_cw("eta(1,3,eta(2,3,oplus(eta(1,2,oplus(v(1),v(2))),v(3))))").unwrap());
        assert_eq!(expr_params(&x).unwrap(), ParamReport::new(1, 3, 3, 1));
        // Relabelling a pending pair onto one label kills the candidate clique.
        let y = WidthExpr::Cw(parse_cw("eta(1,3,rho(2,1,oplus(v(1),v(2))))").unwrap());
        assert_eq!(expr_params(&y).unwrap(), ParamReport::new(2, 1, 1, 2));
    }

    #[test]
    fn guards() {
        let x = WidthExpr::Nlc(parse_nlc("k 13\nv(1)").unwrap());
        assert!(matches!(alpha_expr(&x), Err(Error::Guard { .. })));
        let y = WidthExpr::Nlc(parse_nlc("k 9\nv(1)").unwrap());
        assert!(matches!(chi_expr(&y), Err(Error::Guard { .. })));
        assert_eq!(alpha_expr(&y).unwrap(), 1);
    }
}
