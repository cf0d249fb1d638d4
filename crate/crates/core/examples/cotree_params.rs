// Co-graphs given by co-trees.

use widthdp::cliquewidth::expr_params;
use widthdp::expr::WidthExpr;
use widthdp::special::{cotree_params, parse_cotree};

pub fn run() -> widthdp::Result<()> {
    // Complete tripartite graph K_{1,2,3}.
    let t = parse_cotree("x(l,x(u(l,l),u(l,u(l,l))))")?;
    let g = t.to_graph();
    println!("{t}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    let direct = cotree_params(&t);
    println!("{direct:?}");
    assert_eq!(expr_params(&WidthExpr::Nlc(t.to_nlc()))?, direct);
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
