// Parameters of trees in linear time.

use widthdp::graph::{vertex_cover_number, Graph};
use widthdp::special::{tree_params, RootedTree};

pub fn run() -> widthdp::Result<()> {
    // A complete binary tree on 15 vertices.
    let g = Graph::new(15, (2..=15).map(|v| (v / 2, v)))?;
    for root in [1, 8] {
        let r = tree_params(&RootedTree::new(g.clone(), root)?);
        println!("root {root}: {r:?}, tau {}", vertex_cover_number(15, r.alpha)?);
    }
    let big = Graph::path(100_000)?;
    println!("P_100000 alpha {}", tree_params(&RootedTree::new(big, 1)?).alpha);
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
