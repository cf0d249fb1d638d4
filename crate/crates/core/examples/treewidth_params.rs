// The four parameters of a graph from a tree decomposition.

use widthdp::graph::Graph;
use widthdp::td::{make_nice, validate_td, TreeDecomposition};
use widthdp::treewidth::{alpha_tw, chi_tw, omega_tw, theta_tw};

const GRAPH: &str = "c 6-cycle with one chord\np tw 6 7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n2 5\n";
const TD: &str = "s td 4 3 6\nb 1 1 2 6\nb 2 2 5 6\nb 3 2 3 4\nb 4 2 4 5\n1 2\n2 4\n4 3\n";

pub fn run() -> widthdp::Result<()> {
    let g = Graph::parse_pace(GRAPH)?;
    let td = TreeDecomposition::parse(TD, &g)?;
    assert!(validate_td(&td, &g).is_empty());
    let ntd = make_nice(&td, &g)?;
    println!("width {} with {} nice nodes", ntd.width(), ntd.node_count());
    println!("alpha {}", alpha_tw(&g, &ntd)?);
    println!("omega {}", omega_tw(&g, &td)?);
    println!("chi   {}", chi_tw(&g, &ntd)?);
    println!("theta {}", theta_tw(&g, &ntd)?);
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
