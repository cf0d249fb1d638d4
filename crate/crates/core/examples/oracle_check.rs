// Cross-checking the dynamic programs against exhaustive search.

use widthdp::cliquewidth::expr_params;
use widthdp::expr::Calculus;
use widthdp::oracle::{brute_params, gen_fixture, FixtureKind, FixtureSpec};
use widthdp::treewidth::tw_params;

pub fn run() -> widthdp::Result<()> {
    let mut checked = 0;
    for seed in 0..40 {
        let kind = FixtureKind::PartialKTree { k: 3, n: 10, keep: 0.6 };
        let f = gen_fixture(FixtureSpec { kind, seed })?;
        assert_eq!(tw_params(&f.graph, f.td.as_ref().expect("decomposition"))?, brute_params(&f.graph)?);
        for calculus in [Calculus::CliqueWidth, Calculus::Nlc] {
            let kind = FixtureKind::RandomExpr { calculus, k: 3, leaves: 10 };
            let f = gen_fixture(FixtureSpec { kind, seed })?;
            assert_eq!(expr_params(f.expr.as_ref().expect("expression"))?, brute_params(&f.graph)?);
        }
        checked += 3;
    }
    println!("{checked} fixtures agree with exhaustive search");
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
