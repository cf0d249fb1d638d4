// Complementing an NLC-width expression swaps independent sets and cliques.

use widthdp::cliquewidth::{alpha_expr, chi_expr, omega_expr, theta_expr};
use widthdp::expr::{nlc_complement, parse_nlc, WidthExpr};

pub fn run() -> widthdp::Result<()> {
    let x = parse_nlc("times({(1,2);(2,2)},ren({3:2},times({(1,3)},v(1),v(3))),times({},v(1),v(2)))")?;
    let c = nlc_complement(&x);
    println!("x          = {x}");
    println!("complement = {c}");
    assert_eq!(c.eval(), x.eval().complement());
    let (x, c) = (WidthExpr::Nlc(x), WidthExpr::Nlc(c));
    println!("alpha(x) = {} = omega(complement) = {}", alpha_expr(&x)?, omega_expr(&c)?);
    println!("chi(x)   = {} = theta(complement) = {}", chi_expr(&x)?, theta_expr(&c)?);
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
