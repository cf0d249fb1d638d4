use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BRUTE_FORCE_LIMIT;
use crate::error::{Error, Result};
use crate::expr::{
    bits, Calculus, CwExpr, CwNode, JoinRelation, NlcExpr, NlcNode, Relabeling, WidthExpr,
};
use crate::graph::{Graph, Label, Vertex};
use crate::special::CoTree;
use crate::td::{make_nice, NiceTreeDecomposition, TreeDecomposition};

/// Largest `k` a fixture may request.
pub const FIXTURE_MAX_K: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FixtureKind {
    RandomExpr {
        calculus: Calculus,
        k: usize,
        leaves: usize,
    },
    /// Random subgraph of a random `k`-tree; each edge survives with
    /// probability `keep`.
    PartialKTree { k: usize, n: usize, keep: f64 },
    RandomCotree { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FixtureSpec {
    pub kind: FixtureKind,
    pub seed: u64,
}

/// A generated graph together with the structure it was built from.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: Graph,
    pub td: Option<TreeDecomposition>,
    pub nice: Option<NiceTreeDecomposition>,
    pub expr: Option<WidthExpr>,
    pub cotree: Option<CoTree>,
}

impl Fixture {
    fn from_graph(graph: Graph) -> Self {
        Fixture {
            graph,
            td: None,
            nice: None,
            expr: None,
            cotree: None,
        }
    }
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::Guard {
            what,
            actual,
            limit,
        });
    }
    Ok(())
}

fn positive(what: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::input(format!("{what} must be at least 1")));
    }
    Ok(())
}

/// Deterministic in `spec`.
pub fn gen_fixture(spec: FixtureSpec) -> Result<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        FixtureKind::RandomExpr {
            calculus,
            k,
            leaves,
        } => {
            positive("k", k)?;
            positive("leaf count", leaves)?;
            guard("fixture k", k, FIXTURE_MAX_K)?;
            guard("fixture leaf count", leaves, BRUTE_FORCE_LIMIT)?;
            let expr = match calculus {
                Calculus::CliqueWidth => {
                    let root = random_cw(&mut rng, k, leaves);
                    WidthExpr::Cw(CwExpr::new(root, Some(k))?)
                }
                Calculus::Nlc => {
                    let root = random_nlc(&mut rng, k, leaves);
                    WidthExpr::Nlc(NlcExpr::new(root, k)?)
                }
            };
            Ok(Fixture {
                expr: Some(expr.clone()),
                ..Fixture::from_graph(expr.eval().into_graph())
            })
        }
        FixtureKind::PartialKTree { k, n, keep } => {
            positive("k", k)?;
            positive("vertex count", n)?;
            guard("fixture k", k, FIXTURE_MAX_K)?;
            guard("fixture vertex count", n, BRUTE_FORCE_LIMIT)?;
            if !(0.0..=1.0).contains(&keep) {
                return Err(Error::input(format!("edge keep probability {keep} is outside [0, 1]")));
            }
            let (graph, td) = partial_k_tree(&mut rng, k, n, keep)?;
            let nice = make_nice(&td, &graph)?;
            Ok(Fixture {
                td: Some(td),
                nice: Some(nice),
                ..Fixture::from_graph(graph)
            })
        }
        FixtureKind::RandomCotree { n } => {
            positive("vertex count", n)?;
            guard("fixture vertex count", n, BRUTE_FORCE_LIMIT)?;
            let t = random_cotree(&mut rng, n);
            Ok(Fixture {
                cotree: Some(t.clone()),
                ..Fixture::from_graph(t.to_graph())
            })
        }
    }
}

fn random_cw(rng: &mut ChaCha8Rng, k: usize, leaves: usize) -> CwNode {
    if leaves == 1 {
        return CwNode::Leaf(rng.gen_range(1..=k));
    }
    let split = rng.gen_range(1..leaves);
    let mut x = CwNode::union(random_cw(rng, k, split), random_cw(rng, k, leaves - split));
    if k >= 2 {
        for _ in 0..rng.gen_range(0..=3) {
            let (a, b) = distinct_pair(rng, k);
            x = if rng.gen_bool(0.6) {
                CwNode::add_edges(a, b, x)
            } else {
                CwNode::relabel(a, b, x)
            };
        }
    }
    x
}

fn random_nlc(rng: &mut ChaCha8Rng, k: usize, leaves: usize) -> NlcNode {
    if leaves == 1 {
        return NlcNode::Leaf(rng.gen_range(1..=k));
    }
    let split = rng.gen_range(1..leaves);
    let l = random_nlc(rng, k, split);
    let r = random_nlc(rng, k, leaves - split);
    let pairs: Vec<(Label, Label)> = (1..=k)
        .flat_map(|a| (1..=k).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(0.4))
        .collect();
    let s = JoinRelation::from_pairs(k, pairs).expect("pairs are in range");
    let x = NlcNode::join(s, l, r);
    if rng.gen_bool(0.3) {
        let map = (1..=k).map(|a| (a, rng.gen_range(1..=k)));
        NlcNode::relabel(Relabeling::from_entries(k, map).expect("map is in range"), x)
    } else {
        x
    }
}

fn distinct_pair(rng: &mut ChaCha8Rng, k: usize) -> (Label, Label) {
    let a = rng.gen_range(1..=k);
    let b = rng.gen_range(1..k);
    (a, if b >= a { b + 1 } else { b })
}

/// Random clique-width expression in join-normal form: every `eta` sits on a
/// union and joins a label found only in the left operand to one found only
/// in the right operand. A single `rho` may follow the edge insertions.
pub fn gen_join_normal_cw(k: usize, leaves: usize, seed: u64) -> Result<CwExpr> {
    positive("k", k)?;
    positive("leaf count", leaves)?;
    guard("fixture k", k, FIXTURE_MAX_K)?;
    guard("fixture leaf count", leaves, BRUTE_FORCE_LIMIT)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CwExpr::new(join_normal(&mut rng, k, leaves).0, Some(k))
}

fn join_normal(rng: &mut ChaCha8Rng, k: usize, leaves: usize) -> (CwNode, u32) {
    if leaves == 1 {
        let a = rng.gen_range(1..=k);
        return (CwNode::Leaf(a), 1 << (a - 1));
    }
    let split = rng.gen_range(1..leaves);
    let (l, ll) = join_normal(rng, k, split);
    let (r, rl) = join_normal(rng, k, leaves - split);
    let mut x = CwNode::union(l, r);
    let only_left: Vec<Label> = bits(ll & !rl).collect();
    let only_right: Vec<Label> = bits(rl & !ll).collect();
    if !only_left.is_empty() && !only_right.is_empty() {
        for _ in 0..rng.gen_range(0..=2) {
            let a = *only_left.choose(rng).expect("non-empty");
            let b = *only_right.choose(rng).expect("non-empty");
            x = if rng.gen_bool(0.5) {
                CwNode::add_edges(a, b, x)
            } else {
                CwNode::add_edges(b, a, x)
            };
        }
    }
    let mut live = ll | rl;
    if k >= 2 && rng.gen_bool(0.3) {
        let (a, b) = distinct_pair(rng, k);
        x = CwNode::relabel(a, b, x);
        if live & 1 << (a - 1) != 0 {
            live = (live & !(1 << (a - 1))) | 1 << (b - 1);
        }
    }
    (x, live)
}

fn partial_k_tree(
    rng: &mut ChaCha8Rng,
    k: usize,
    n: usize,
    keep: f64,
) -> Result<(Graph, TreeDecomposition)> {
    let first = n.min(k + 1);
    let mut bags: Vec<Vec<Vertex>> = vec![(1..=first).collect()];
    let mut tree_edges = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for u in 1..=first {
        for v in u + 1..=first {
            edges.push((u, v));
        }
    }
    for v in first + 1..=n {
        let parent = rng.gen_range(0..bags.len());
        let mut bag = bags[parent].clone();
        let drop = rng.gen_range(0..bag.len());
        bag.remove(drop);
        edges.extend(bag.iter().map(|&u| (u, v)));
        bag.push(v);
        bags.push(bag);
        tree_edges.push((parent + 1, bags.len()));
    }
    edges.retain(|_| rng.gen_bool(keep));

    let mut perm: Vec<Vertex> = (1..=n).collect();
    perm.shuffle(rng);
    let relabel = |v: Vertex| perm[v - 1];
    let edges: Vec<(Vertex, Vertex)> = edges
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (relabel(u), relabel(v));
            (a.min(b), a.max(b))
        })
        .collect();
    let bags: Vec<(usize, Vec<Vertex>)> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| (i + 1, b.into_iter().map(relabel).collect()))
        .collect();
    let graph = Graph::new(n, edges)?;
    let td = TreeDecomposition::new(n, bags, &tree_edges)?;
    Ok((graph, td))
}

fn random_cotree(rng: &mut ChaCha8Rng, n: usize) -> CoTree {
    if n == 1 {
        return CoTree::Leaf;
    }
    let split = rng.gen_range(1..n);
    let l = random_cotree(rng, split);
    let r = random_cotree(rng, n - split);
    if rng.gen_bool(0.5) {
        CoTree::union(l, r)
    } else {
        CoTree::join(l, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::td::validate_td;

    fn spec(kind: FixtureKind, seed: u64) -> FixtureSpec {
        FixtureSpec { kind, seed }
    }

    #[test]
    fn partial_one_tree_is_a_tree() {
        for seed in 0..20 {
            let f = gen_fixture(spec(FixtureKind::PartialKTree { k: 1, n: 5, keep: 1.0 }, seed)).unwrap();
            assert_eq!(f.graph.edge_count(), 4);
            let td = f.td.unwrap();
            assert!(validate_td(&td, &f.graph).is_empty());
            assert_eq!(td.width(), 1);
        }
    }

    #[test]
    fn decompositions_stay_valid_after_deletions() {
        for seed in 0..50 {
            for k in 1..=4 {
                let kind = FixtureKind::PartialKTree { k, n: 10, keep: 0.5 };
                let f = gen_fixture(spec(kind, seed)).unwrap();
                let td = f.td.as_ref().unwrap();
                assert!(validate_td(td, &f.graph).is_empty());
                assert!(td.width() <= k);
            }
        }
    }

    #[test]
    fn single_leaf_expression() {
        let kind = FixtureKind::RandomExpr {
            calculus: Calculus::CliqueWidth,
            k: 2,
            leaves: 1,
        };
        let f = gen_fixture(spec(kind, 7)).unwrap();
        assert!(matches!(f.expr.unwrap(), WidthExpr::Cw(x) if matches!(x.root(), CwNode::Leaf(_))));
    }

    #[test]
    fn cotree_leaf_count() {
        let f = gen_fixture(spec(FixtureKind::RandomCotree { n: 4 }, 3)).unwrap();
        assert_eq!(f.cotree.unwrap().leaf_count(), 4);
        assert_eq!(f.graph.vertex_count(), 4);
    }

    #[test]
    fn deterministic() {
        let kind = FixtureKind::RandomExpr {
            calculus: Calculus::Nlc,
            k: 3,
            leaves: 9,
        };
        let a = gen_fixture(spec(kind, 11)).unwrap();
        let b = gen_fixture(spec(kind, 11)).unwrap();
        assert_eq!(a.expr, b.expr);
        assert_eq!(a.graph, b.graph);
    }

    #[test]
    fn guards() {
        let big = FixtureKind::PartialKTree { k: 5, n: 8, keep: 1.0 };
        assert!(matches!(gen_fixture(spec(big, 0)), Err(Error::Guard { .. })));
        let many = FixtureKind::RandomCotree { n: 15 };
        assert!(matches!(gen_fixture(spec(many, 0)), Err(Error::Guard { .. })));
        let bad = FixtureKind::PartialKTree { k: 2, n: 8, keep: 1.5 };
        assert!(matches!(gen_fixture(spec(bad, 0)), Err(Error::Input(_))));
        assert!(gen_join_normal_cw(5, 3, 0).is_err());
    }

    #[test]
    fn join_normal_fixtures_convert() {
        for seed in 0..100 {
            let x = gen_join_normal_cw(3, 10, seed).unwrap();
            let y = crate::expr::cw_to_nlc(&x).unwrap();
            assert_eq!(y.eval(), x.eval(), "seed {seed}");
        }
    }
}
