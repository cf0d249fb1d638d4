// Parameters from clique-width and NLC-width expressions.

use widthdp::cliquewidth::expr_params;
use widthdp::expr::{gen_family, Calculus, Family, WidthExpr};

pub fn run() -> widthdp::Result<()> {
    // C5 as a path 1-2-3-4-5 whose last vertex is joined back to vertex 1.
    let c5 = WidthExpr::parse(
        "eta(1,4,eta(3,4,oplus(\
         rho(4,3,rho(3,2,eta(3,4,oplus(\
         rho(4,3,rho(3,2,eta(3,4,oplus(eta(1,3,oplus(v(1),v(3))),v(4))))),v(4))))),v(4))))",
    )?;
    let g = c5.eval();
    println!("{} vertices, edges {:?}, labels {:?}", g.graph().vertex_count(), g.graph().edges(), g.labels());
    assert_eq!(g.graph().edges(), &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
    println!("C5: {:?}", expr_params(&c5)?);

    for calculus in [Calculus::CliqueWidth, Calculus::Nlc] {
        for family in [Family::Clique, Family::Path] {
            let x = gen_family(family, 7, calculus)?;
            println!("{family:?} 7 over {calculus} (k = {}): {:?}", x.k(), expr_params(&x)?);
        }
    }
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
