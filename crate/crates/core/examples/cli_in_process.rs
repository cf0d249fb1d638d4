// Driving the command-line front end from code.

use widthdp::cli::run as widthdp;

pub fn run() -> widthdp::Result<()> {
    let dir = std::env::temp_dir().join(format!("widthdp-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cot = dir.join("p4.cot");
    std::fs::write(&cot, "u(x(l,l),x(l,l))")?;
    let out = widthdp(["widthdp", "all", "--cotree", &cot.to_string_lossy(), "--json", "--oracle"]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);
    let refused = widthdp(["widthdp", "gen", "random-cotree", "--n", "40"]);
    print!("exit {}: {}", refused.code, refused.stderr);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() -> widthdp::Result<()> {
    run()
}
