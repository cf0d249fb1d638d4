// Turning a tree decomposition into a nice one.

use widthdp::graph::Graph;
use widthdp::td::{make_nice, NodeKind, TreeDecomposition};

pub fn run() -> widthdp::Result<()> {
    let g = Graph::path(4)?;
    let td = TreeDecomposition::new(4, vec![(1, vec![1, 2]), (2, vec![2, 3]), (3, vec![3, 4])], &[(1, 2), (2, 3)])?;
    let ntd = make_nice(&td, &g)?;
    for (i, node) in ntd.nodes().iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Leaf => "leaf".to_string(),
            NodeKind::Introduce(v) => format!("introduce {v}"),
            NodeKind::Forget(v) => format!("forget {v}"),
            NodeKind::Join => "join".to_string(),
        };
        println!("node {i:>2} {kind:<12} bag {:?} children {:?}", node.bag, node.children);
    }
    assert!(ntd.check_conditions().is_empty());
    assert!(ntd.node_count() <= ntd.node_bound());
    print!("{}", ntd.to_td());
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
