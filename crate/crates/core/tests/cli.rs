use std::fs;
use std::path::Path;
use std::process::Command;

use widthdp::cli::run;
use widthdp::expr::{gen_family, Calculus, Family};
use widthdp::oracle::{gen_fixture, FixtureKind, FixtureSpec};

const P3_GR: &str = "p tw 3 2\n1 2\n2 3\n";
const P3_TD: &str = "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn widthdp(args: &[&str]) -> widthdp::cli::Outcome {
    let mut argv = vec!["widthdp"];
    argv.extend_from_slice(args);
    run(argv)
}

#[test]
fn all_on_p3_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let (gr, td) = (write(dir.path(), "p3.gr", P3_GR), write(dir.path(), "p3.td", P3_TD));
    let out = widthdp(&["all", "--graph", &gr, "--td", &td, "--json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{\"alpha\":2,\"omega\":2,\"chi\":2,\"theta\":2,\"tau\":1,\"route\":\"treewidth\"}\n");
    let plain = widthdp(&["all", "--graph", &gr, "--td", &td]);
    assert_eq!(plain.stdout, "2\n2\n2\n2\n1\n");
}

#[test]
fn alpha_of_k6() {
    let dir = tempfile::tempdir().unwrap();
    let x = gen_family(Family::Clique, 6, Calculus::CliqueWidth).unwrap();
    let path = write(dir.path(), "k6.cwe", &x.to_text());
    let out = widthdp(&["alpha", "--expr", &path]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
    let json = widthdp(&["chi", "--expr", &path, "--json", "--oracle"]);
    assert_eq!(json.stdout, "{\"chi\":6,\"route\":\"cliquewidth\"}\n");
}

#[test]
fn check_td_lists_violations() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write(dir.path(), "p3.gr", P3_GR);
    let bad = write(dir.path(), "bad.td", "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n");
    let out = widthdp(&["check-td", "--graph", &gr, "--td", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("edge {2,3}"), "{}", out.stderr);
    let td = write(dir.path(), "p3.td", P3_TD);
    let ok = widthdp(&["check-td", "--graph", &gr, "--td", &td, "--json"]);
    assert_eq!(ok.stdout, "{\"valid\":true,\"width\":1,\"violations\":[]}\n");
}

#[test]
fn routes_must_be_unambiguous() {
    let dir = tempfile::tempdir().unwrap();
    let (gr, td) = (write(dir.path(), "p3.gr", P3_GR), write(dir.path(), "p3.td", P3_TD));
    let cot = write(dir.path(), "p3.cot", "x(l,u(l,l))");
    assert_eq!(widthdp(&["alpha"]).code, 1);
    assert_eq!(widthdp(&["alpha", "--graph", &gr]).code, 1);
    assert_eq!(widthdp(&["alpha", "--graph", &gr, "--td", &td, "--cotree", &cot]).code, 1);
    assert_eq!(widthdp(&["alpha", "--graph", &gr, "--tree", "--td", &td]).code, 1);
    assert_eq!(widthdp(&["alpha", "--td", &td, "--cotree", &cot]).code, 1);
    assert_eq!(widthdp(&["frobnicate"]).code, 1);
}

#[test]
fn routes_agree_on_a_cograph() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..20 {
        let f = gen_fixture(FixtureSpec { kind: FixtureKind::RandomCotree { n: 8 }, seed }).unwrap();
        let t = f.cotree.unwrap();
        let cot = write(dir.path(), "g.cot", &t.to_string());
        let nlc = write(dir.path(), "g.nlce", &t.to_nlc().to_text());
        let gr = write(dir.path(), "g.gr", &f.graph.to_pace());
        let all: Vec<String> = (1..=8).map(|v| v.to_string()).collect();
        let td = write(dir.path(), "g.td", &format!("s td 1 8 8\nb 1 {}\n", all.join(" ")));
        let results: Vec<String> = [
            vec!["all", "--cotree", &cot],
            vec!["all", "--expr", &nlc],
            vec!["all", "--graph", &gr, "--td", &td],
            vec!["oracle", "--graph", &gr],
        ]
        .iter()
        .map(|args| {
            let out = widthdp(args);
            assert_eq!(out.code, 0, "{}", out.stderr);
            out.stdout
        })
        .collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]), "seed {seed}: {results:?}");
    }
}

#[test]
fn tree_route() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write(dir.path(), "p3.gr", P3_GR);
    let out = widthdp(&["all", "--graph", &gr, "--tree", "--root", "2", "--json", "--oracle"]);
    assert_eq!(out.stdout, "{\"alpha\":2,\"omega\":2,\"chi\":2,\"theta\":2,\"tau\":1,\"route\":\"tree\"}\n");
    let c4 = write(dir.path(), "c4.gr", "p tw 4 4\n1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(widthdp(&["alpha", "--graph", &c4, "--tree"]).code, 1);
}

#[test]
fn guard_refusals_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(dir.path(), "e15.gr", "p tw 15 0\n");
    assert_eq!(widthdp(&["oracle", "--graph", &big]).code, 2);
    let x = gen_family(Family::Path, 20, Calculus::CliqueWidth).unwrap();
    let path = write(dir.path(), "p20.cwe", &x.to_text());
    let out = widthdp(&["all", "--expr", &path, "--oracle"]);
    assert_eq!(out.code, 2, "{}", out.stderr);
    assert!(out.stderr.contains("guard"));
    assert_eq!(widthdp(&["gen", "random-cotree", "--n", "20"]).code, 2);
}

#[test]
fn expression_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let cw = write(dir.path(), "k2.cwe", "eta(1,2,oplus(v(1),v(2)))");
    let out = widthdp(&["convert", "--expr", &cw]);
    assert_eq!(out.stdout, "k 2\ntimes({(1,2)},v(1),v(2))\n");
    let nlc = write(dir.path(), "k2.nlce", &out.stdout);
    let comp = widthdp(&["complement", "--expr", &nlc]);
    assert_eq!(comp.stdout, "k 2\ntimes({(1,1);(2,1);(2,2)},v(1),v(2))\n");
    let eval = widthdp(&["eval", "--expr", &cw]);
    assert_eq!(eval.stdout, "c labels 1 2\np tw 2 1\n1 2\n");
    let bad = write(dir.path(), "bad.cwe", "eta(1,2,oplus(oplus(v(1),v(2)),v(3)))");
    let err = widthdp(&["convert", "--expr", &bad]);
    assert_eq!(err.code, 1);
    assert!(err.stderr.contains("join-normal form"), "{}", err.stderr);
    assert_eq!(widthdp(&["convert", "--expr", &nlc]).code, 1);
    let syntax = write(dir.path(), "s.cwe", "eta(1,1,v(1))");
    let err = widthdp(&["alpha", "--expr", &syntax]);
    assert!(err.code == 1 && err.stderr.contains("line 1"), "{}", err.stderr);
}

#[test]
fn nice_output_is_a_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let (gr, td) = (write(dir.path(), "p3.gr", P3_GR), write(dir.path(), "p3.td", P3_TD));
    let out = widthdp(&["nice", "--graph", &gr, "--td", &td]);
    assert_eq!(out.code, 0);
    let nice = write(dir.path(), "nice.td", &out.stdout);
    assert_eq!(widthdp(&["check-td", "--graph", &gr, "--td", &nice]).stdout, "valid, width 1\n");
}

#[test]
fn gen_and_batch() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fixtures");
    let o = out_dir.to_string_lossy().into_owned();
    assert_eq!(widthdp(&["gen", "partial-k-tree", "--k", "2", "--n", "9"]).code, 1);
    let made = widthdp(&["gen", "partial-k-tree", "--k", "2", "--n", "9", "--keep", "0.7", "--seed", "4", "--out", &o]);
    assert_eq!(made.code, 0, "{}", made.stderr);
    assert_eq!(made.stdout.lines().count(), 2);
    for (kind, extra) in [("random-expr", ["--leaves", "7"]), ("random-cotree", ["--n", "7"])] {
        let out = widthdp(&["gen", kind, "--k", "3", extra[0], extra[1], "--calculus", "nlc", "--out", &o]);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
    write(&out_dir, "broken.cwe", "oplus(v(1)");
    let out = widthdp(&["all", "--batch", &o, "--oracle"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout.lines().count(), 3, "{}", out.stdout);
    assert!(out.stderr.starts_with("broken: error"));
    let json = widthdp(&["alpha", "--batch", &o, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v.as_object().unwrap().len(), 4);
    assert!(json.stdout.contains("\"graph-4\":{\"alpha\":"));
    assert!(v["broken"]["error"].is_string());

    let printed = widthdp(&["gen", "random-expr", "--k", "2", "--leaves", "5", "--seed", "9"]);
    let again = widthdp(&["gen", "random-expr", "--k", "2", "--leaves", "5", "--seed", "9"]);
    assert_eq!(printed, again);
    assert!(printed.stdout.starts_with("k 2\n"));
}

#[test]
fn binary_forwards_exit_status() {
    let bin = env!("CARGO_BIN_EXE_widthdp");
    let dir = tempfile::tempdir().unwrap();
    let cot = write(dir.path(), "p3.cot", "x(l,u(l,l))");
    let ok = Command::new(bin).args(["theta", "--cotree", &cot]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "2\n");
    let refused = Command::new(bin).args(["gen", "random-cotree", "--n", "99"]).output().unwrap();
    assert_eq!(refused.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert!(help.status.success());
}
