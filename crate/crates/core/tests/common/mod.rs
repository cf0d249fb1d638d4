#![allow(dead_code)]

use std::collections::HashMap;

use widthdp::expr::{Calculus, CwExpr, WidthExpr};
use widthdp::graph::Graph;
use widthdp::oracle::{gen_fixture, gen_join_normal_cw, Fixture, FixtureKind, FixtureSpec};
use widthdp::td::{NiceTreeDecomposition, NodeKind};

pub const KEEP: [f64; 4] = [1.0, 0.85, 0.6, 0.35];

/// Partial k-trees with k in 1..=3, n in 1..=10 and four keep probabilities.
pub fn tw_fixtures(count: u64) -> Vec<(FixtureSpec, Fixture)> {
    (0..count)
        .map(|seed| {
            let kind = FixtureKind::PartialKTree {
                k: 1 + (seed % 3) as usize,
                n: 1 + (seed / 3 % 10) as usize,
                keep: KEEP[(seed / 30 % 4) as usize],
            };
            let spec = FixtureSpec { kind, seed };
            (spec, gen_fixture(spec).expect("fixture within guards"))
        })
        .collect()
}

/// Random expressions with k in 1..=3 and 1..=12 leaves.
pub fn expr_fixtures(calculus: Calculus, count: u64) -> Vec<(FixtureSpec, Fixture)> {
    (0..count)
        .map(|seed| {
            let kind = FixtureKind::RandomExpr {
                calculus,
                k: 1 + (seed % 3) as usize,
                leaves: 1 + (seed / 3 % 12) as usize,
            };
            let spec = FixtureSpec { kind, seed };
            (spec, gen_fixture(spec).expect("fixture within guards"))
        })
        .collect()
}

pub fn cotree_fixtures(count: u64) -> Vec<(FixtureSpec, Fixture)> {
    (0..count)
        .map(|seed| {
            let spec = FixtureSpec {
                kind: FixtureKind::RandomCotree {
                    n: 1 + (seed % 10) as usize,
                },
                seed,
            };
            (spec, gen_fixture(spec).expect("fixture within guards"))
        })
        .collect()
}

pub fn join_normal_fixtures(count: u64) -> Vec<(u64, CwExpr)> {
    (0..count)
        .map(|seed| {
            let k = 1 + (seed % 3) as usize;
            let leaves = 1 + (seed / 3 % 12) as usize;
            (seed, gen_join_normal_cw(k, leaves, seed).expect("fixture within guards"))
        })
        .collect()
}

pub fn expr_of(f: &Fixture) -> &WidthExpr {
    f.expr.as_ref().expect("expression fixture")
}

/// The coloring recurrence read literally: a block whose trace empties at a
/// forget node is counted as a closed color and never reused, and the answer
/// is the number of closed colors plus the blocks at the root.
pub fn literal_chi(g: &Graph, ntd: &NiceTreeDecomposition) -> usize {
    literal_partition_dp(g, ntd, |g, block, v| block.iter().all(|&w| !g.adjacent(v, w)))
}

/// The clique cover recurrence read literally, with "independent set"
/// replaced by "clique": a block grows whenever its trace plus the new vertex
/// is a clique, whether or not it already holds forgotten vertices.
pub fn literal_theta(g: &Graph, ntd: &NiceTreeDecomposition) -> usize {
    literal_partition_dp(g, ntd, |g, block, v| block.iter().all(|&w| g.adjacent(v, w)))
}

type Partition = Vec<Vec<usize>>;

fn literal_partition_dp(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    extendable: impl Fn(&Graph, &[usize], usize) -> bool,
) -> usize {
    let mut tables: Vec<HashMap<Partition, usize>> = Vec::new();
    let canon = |mut p: Partition| {
        for b in &mut p {
            b.sort_unstable();
        }
        p.sort();
        p
    };
    for node in ntd.nodes() {
        let mut out: HashMap<Partition, usize> = HashMap::new();
        let mut put = |p: Partition, a: usize| {
            let slot = out.entry(canon(p)).or_insert(a);
            *slot = (*slot).min(a);
        };
        match node.kind {
            NodeKind::Leaf => put(vec![node.bag.clone()], 0),
            NodeKind::Introduce(v) => {
                for (p, &a) in &tables[node.children[0]] {
                    let mut fresh = p.clone();
                    fresh.push(vec![v]);
                    put(fresh, a);
                    for i in 0..p.len() {
                        if extendable(g, &p[i], v) {
                            let mut grown = p.clone();
                            grown[i].push(v);
                            put(grown, a);
                        }
                    }
                }
            }
            NodeKind::Forget(v) => {
                for (p, &a) in &tables[node.children[0]] {
                    let closed = p.iter().any(|b| b == &vec![v]);
                    let rest: Partition = p
                        .iter()
                        .map(|b| b.iter().copied().filter(|&w| w != v).collect::<Vec<_>>())
                        .filter(|b| !b.is_empty())
                        .collect();
                    put(rest, a + usize::from(closed));
                }
            }
            NodeKind::Join => {
                let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                for (p, &a) in l {
                    if let Some(&b) = r.get(p) {
                        put(p.clone(), a + b);
                    }
                }
            }
        }
        tables.push(out);
    }
    tables
        .pop()
        .expect("root table")
        .into_iter()
        .map(|(p, a)| p.len() + a)
        .min()
        .expect("some partition")
}
