// Converting clique-width expressions in join-normal form to NLC-width.

use widthdp::cliquewidth::expr_params;
use widthdp::expr::{cw_to_nlc, parse_cw, WidthExpr};
use widthdp::Error;

pub fn run() -> widthdp::Result<()> {
    let x = parse_cw("rho(3,1,eta(2,3,oplus(eta(1,2,oplus(v(1),v(2))),v(3))))")?;
    let y = cw_to_nlc(&x)?;
    println!("{x}\n  -> {y}");
    assert_eq!(x.eval(), y.eval());
    assert_eq!(expr_params(&WidthExpr::Cw(x))?, expr_params(&WidthExpr::Nlc(y))?);

    let inside = parse_cw("eta(1,2,oplus(oplus(v(1),v(2)),v(3)))")?;
    match cw_to_nlc(&inside) {
        Err(e @ Error::NotJoinNormalForm(_)) => println!("rejected: {e}"),
        other => panic!("expected a join-normal-form error, got {other:?}"),
    }
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
