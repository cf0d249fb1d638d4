//! Command-line front end.
//!
//! Parameter verbs take exactly one route: `--graph` with `--td`, `--expr`,
//! `--cotree`, or `--graph` with `--tree`. Exit status is 0 on success, 2
//! when a size guard refuses the instance and 1 for every other error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::cliquewidth::{alpha_expr, chi_expr, omega_expr, theta_expr};
use crate::error::{Error, Result};
use crate::expr::{cw_to_nlc, gen_family, nlc_complement, Calculus, Family, WidthExpr};
use crate::graph::{vertex_cover_number, Graph, LabeledGraph};
use crate::oracle::{brute_params, gen_fixture, FixtureKind, FixtureSpec};
use crate::special::{cotree_params, parse_cotree, tree_params, CoTree, RootedTree};
use crate::td::{make_nice, validate_td, NiceTreeDecomposition, TreeDecomposition};
use crate::treewidth::{alpha_tw, chi_tw, omega_tw, theta_tw};

#[derive(Parser, Debug, Clone)]
#[command(name = "widthdp", version, about = "Graph parameters from tree decompositions and width expressions")]
pub struct Args {
    pub verb: Verb,

    /// Fixture kind for `gen`.
    pub kind: Option<GenKind>,

    /// Graph in PACE `.gr` format.
    #[arg(long)]
    pub graph: Option<PathBuf>,

    /// Tree decomposition in PACE `.td` format.
    #[arg(long)]
    pub td: Option<PathBuf>,

    /// Clique-width or NLC-width expression; the calculus is detected.
    #[arg(long)]
    pub expr: Option<PathBuf>,

    /// Co-tree file.
    #[arg(long)]
    pub cotree: Option<PathBuf>,

    /// Treat `--graph` as a tree.
    #[arg(long)]
    pub tree: bool,

    /// Root for `--tree`.
    #[arg(long, default_value_t = 1)]
    pub root: usize,

    #[arg(long)]
    pub json: bool,

    /// Cross-check every value against exhaustive search.
    #[arg(long)]
    pub oracle: bool,

    /// Directory of instances, processed in parallel.
    #[arg(long)]
    pub batch: Option<PathBuf>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long)]
    pub k: Option<usize>,

    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub leaves: Option<usize>,

    /// Edge keep probability for `gen partial-k-tree`.
    #[arg(long, default_value_t = 1.0)]
    pub keep: f64,

    #[arg(long, value_enum, default_value_t = CalculusArg::Cw)]
    pub calculus: CalculusArg,

    /// Output directory for `gen`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Alpha,
    Omega,
    Chi,
    Theta,
    Tau,
    All,
    CheckTd,
    Nice,
    Eval,
    Convert,
    Complement,
    Oracle,
    Gen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    PartialKTree,
    RandomExpr,
    RandomCotree,
    Clique,
    Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CalculusArg {
    Cw,
    Nlc,
}

impl From<CalculusArg> for Calculus {
    fn from(c: CalculusArg) -> Self {
        match c {
            CalculusArg::Cw => Calculus::CliqueWidth,
            CalculusArg::Nlc => Calculus::Nlc,
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(e: &Error) -> Self {
        Outcome {
            code: exit_code(e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guard { .. } => 2,
        _ => 1,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&args)
}

pub fn execute(args: &Args) -> Outcome {
    if let Some(dir) = &args.batch {
        return batch(args, dir);
    }
    match dispatch(args) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::fail(&e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Param {
    Alpha,
    Omega,
    Chi,
    Theta,
    Tau,
}

impl Param {
    fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Omega => "omega",
            Param::Chi => "chi",
            Param::Theta => "theta",
            Param::Tau => "tau",
        }
    }
}

fn requested(verb: Verb) -> Option<&'static [Param]> {
    Some(match verb {
        Verb::Alpha => &[Param::Alpha],
        Verb::Omega => &[Param::Omega],
        Verb::Chi => &[Param::Chi],
        Verb::Theta => &[Param::Theta],
        Verb::Tau => &[Param::Tau],
        Verb::All | Verb::Oracle => &[Param::Alpha, Param::Omega, Param::Chi, Param::Theta, Param::Tau],
        _ => return None,
    })
}

/// Values in the fixed JSON field order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    pub route: &'static str,
}

impl Report {
    fn slot(&mut self, p: Param) -> &mut Option<usize> {
        match p {
            Param::Alpha => &mut self.alpha,
            Param::Omega => &mut self.omega,
            Param::Chi => &mut self.chi,
            Param::Theta => &mut self.theta,
            Param::Tau => &mut self.tau,
        }
    }

    fn values(&self) -> impl Iterator<Item = usize> {
        [self.alpha, self.omega, self.chi, self.theta, self.tau].into_iter().flatten()
    }

    fn plain(&self) -> String {
        self.values().map(|v| format!("{v}\n")).collect()
    }
}

enum Route {
    Treewidth {
        graph: Graph,
        td: TreeDecomposition,
        nice: Option<NiceTreeDecomposition>,
    },
    Expr(WidthExpr),
    Cograph(CoTree),
    Tree(RootedTree),
    Oracle(Graph),
}

impl Route {
    fn name(&self) -> &'static str {
        match self {
            Route::Treewidth { .. } => "treewidth",
            Route::Expr(WidthExpr::Cw(_)) => "cliquewidth",
            Route::Expr(WidthExpr::Nlc(_)) => "nlcwidth",
            Route::Cograph(_) => "cograph",
            Route::Tree(_) => "tree",
            Route::Oracle(_) => "oracle",
        }
    }

    fn graph(&self) -> Graph {
        match self {
            Route::Treewidth { graph, .. } | Route::Oracle(graph) => graph.clone(),
            Route::Expr(x) => x.eval().into_graph(),
            Route::Cograph(t) => t.to_graph(),
            Route::Tree(t) => t.graph().clone(),
        }
    }

    fn vertex_count(&self) -> usize {
        match self {
            Route::Treewidth { graph, .. } | Route::Oracle(graph) => graph.vertex_count(),
            Route::Expr(x) => x.leaf_count(),
            Route::Cograph(t) => t.leaf_count(),
            Route::Tree(t) => t.graph().vertex_count(),
        }
    }

    fn nice(&mut self) -> Result<(&Graph, &NiceTreeDecomposition)> {
        let Route::Treewidth { graph, td, nice } = self else {
            unreachable!("nice decompositions exist only on the tree-width route")
        };
        if nice.is_none() {
            *nice = Some(make_nice(td, graph)?);
        }
        Ok((graph, nice.as_ref().expect("just built")))
    }

    fn compute(&mut self, p: Param) -> Result<usize> {
        if p == Param::Tau {
            let alpha = self.compute(Param::Alpha)?;
            return vertex_cover_number(self.vertex_count(), alpha);
        }
        match self {
            Route::Treewidth { graph, td, .. } if p == Param::Omega => omega_tw(graph, td),
            Route::Treewidth { .. } => {
                let (g, ntd) = self.nice()?;
                match p {
                    Param::Alpha => alpha_tw(g, ntd),
                    Param::Chi => chi_tw(g, ntd),
                    _ => theta_tw(g, ntd),
                }
            }
            Route::Expr(x) => match p {
                Param::Alpha => alpha_expr(x),
                Param::Omega => omega_expr(x),
                Param::Chi => chi_expr(x),
                _ => theta_expr(x),
            },
            Route::Cograph(t) => Ok(pick(cotree_params(t), p)),
            Route::Tree(t) => Ok(pick(tree_params(t), p)),
            Route::Oracle(g) => Ok(pick(brute_params(g)?, p)),
        }
    }
}

fn pick(r: crate::graph::ParamReport, p: Param) -> usize {
    match p {
        Param::Alpha => r.alpha,
        Param::Omega => r.omega,
        Param::Chi => r.chi,
        _ => r.theta,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_pace(&read(path)?)
}

fn read_expr(path: &Path) -> Result<WidthExpr> {
    WidthExpr::parse(&read(path)?)
}

fn read_td(path: &Path, g: &Graph) -> Result<TreeDecomposition> {
    TreeDecomposition::parse(&read(path)?, g)
}

fn select_route(args: &Args) -> Result<Route> {
    let graph_td = args.graph.is_some() && args.td.is_some();
    let graph_tree = args.graph.is_some() && args.tree;
    let routes = [graph_td, args.expr.is_some(), args.cotree.is_some(), graph_tree];
    let chosen = routes.iter().filter(|&&r| r).count();
    if chosen != 1 || (args.graph.is_some() && !graph_td && !graph_tree) || (args.td.is_some() && !graph_td) {
        return Err(Error::input(
            "give exactly one route: --graph with --td, --expr, --cotree, or --graph with --tree",
        ));
    }
    if graph_td {
        let graph = read_graph(args.graph.as_deref().expect("checked"))?;
        let td = read_td(args.td.as_deref().expect("checked"), &graph)?;
        return Ok(Route::Treewidth { graph, td, nice: None });
    }
    if let Some(path) = &args.expr {
        return Ok(Route::Expr(read_expr(path)?));
    }
    if let Some(path) = &args.cotree {
        return Ok(Route::Cograph(parse_cotree(&read(path)?)?));
    }
    let graph = read_graph(args.graph.as_deref().expect("checked"))?;
    Ok(Route::Tree(RootedTree::new(graph, args.root)?))
}

fn report(route: &mut Route, params: &[Param], oracle: bool) -> Result<Report> {
    let mut out = Report {
        route: route.name(),
        ..Report::default()
    };
    for &p in params {
        *out.slot(p) = Some(route.compute(p)?);
    }
    if oracle {
        let g = route.graph();
        let truth = brute_params(&g)?.with_tau(g.vertex_count())?;
        for &p in params {
            let expected = match p {
                Param::Tau => truth.tau.expect("tau was filled in"),
                _ => pick(truth.clone(), p),
            };
            let computed = out.slot(p).expect("computed above");
            if computed != expected {
                return Err(Error::OracleMismatch {
                    param: p.name(),
                    computed,
                    oracle: expected,
                });
            }
        }
    }
    Ok(out)
}

fn render(r: &Report, json: bool) -> String {
    if json {
        format!("{}\n", serde_json::to_string(r).expect("report serializes"))
    } else {
        r.plain()
    }
}

fn dispatch(args: &Args) -> Result<String> {
    if let Some(params) = requested(args.verb) {
        let mut route = if args.verb == Verb::Oracle {
            let path = args.graph.as_deref().ok_or_else(|| Error::input("oracle needs --graph"))?;
            Route::Oracle(read_graph(path)?)
        } else {
            select_route(args)?
        };
        return Ok(render(&report(&mut route, params, args.oracle)?, args.json));
    }
    match args.verb {
        Verb::CheckTd => check_td(args),
        Verb::Nice => {
            let (g, td) = graph_and_td(args)?;
            Ok(make_nice(&td, &g)?.to_td())
        }
        Verb::Eval => {
            let x = read_expr(need(&args.expr, "eval", "--expr")?)?;
            Ok(labeled_text(&x.eval(), args.json))
        }
        Verb::Convert => match read_expr(need(&args.expr, "convert", "--expr")?)? {
            WidthExpr::Cw(x) => Ok(cw_to_nlc(&x)?.to_text()),
            WidthExpr::Nlc(_) => Err(Error::input("convert expects a clique-width expression")),
        },
        Verb::Complement => {
            if let Some(path) = &args.expr {
                match read_expr(path)? {
                    WidthExpr::Nlc(x) => Ok(nlc_complement(&x).to_text()),
                    WidthExpr::Cw(_) => Err(Error::input("complement expects an NLC-width expression")),
                }
            } else {
                let g = read_graph(need(&args.graph, "complement", "--graph or --expr")?)?;
                Ok(g.complement().to_pace())
            }
        }
        Verb::Gen => generate(args),
        _ => unreachable!("parameter verbs are handled above"),
    }
}

fn need<'a>(path: &'a Option<PathBuf>, verb: &str, flag: &str) -> Result<&'a Path> {
    path.as_deref().ok_or_else(|| Error::input(format!("{verb} needs {flag}")))
}

fn graph_and_td(args: &Args) -> Result<(Graph, TreeDecomposition)> {
    let g = read_graph(need(&args.graph, "this verb", "--graph")?)?;
    let td = read_td(need(&args.td, "this verb", "--td")?, &g)?;
    Ok((g, td))
}

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    width: usize,
    violations: Vec<String>,
}

fn check_td(args: &Args) -> Result<String> {
    let (g, td) = graph_and_td(args)?;
    let violations = validate_td(&td, &g);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    Ok(if args.json {
        let r = CheckReport {
            valid: true,
            width: td.width(),
            violations: Vec::new(),
        };
        format!("{}\n", serde_json::to_string(&r).expect("report serializes"))
    } else {
        format!("valid, width {}\n", td.width())
    })
}

#[derive(Serialize)]
struct LabeledGraphJson<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    labels: &'a [usize],
}

fn labeled_text(g: &LabeledGraph, json: bool) -> String {
    if json {
        let j = LabeledGraphJson {
            n: g.graph().vertex_count(),
            edges: g.graph().edges(),
            labels: g.labels(),
        };
        return format!("{}\n", serde_json::to_string(&j).expect("graph serializes"));
    }
    let labels: Vec<String> = g.labels().iter().map(ToString::to_string).collect();
    format!("c labels {}\n{}", labels.join(" "), g.graph().to_pace())
}

fn generate(args: &Args) -> Result<String> {
    let kind = args.kind.ok_or_else(|| {
        Error::input("gen needs a kind: partial-k-tree, random-expr, random-cotree, clique or path")
    })?;
    let need_usize = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::input(format!("gen {kind:?} needs {flag}")));
    let calculus = Calculus::from(args.calculus);
    let fixture_kind = match kind {
        GenKind::Clique | GenKind::Path => {
            let family = if kind == GenKind::Clique { Family::Clique } else { Family::Path };
            let x = gen_family(family, need_usize(args.n, "--n")?, calculus)?;
            return emit(args, &[("expr", expr_ext(&x), x.to_text())]);
        }
        GenKind::PartialKTree => FixtureKind::PartialKTree {
            k: need_usize(args.k, "--k")?,
            n: need_usize(args.n, "--n")?,
            keep: args.keep,
        },
        GenKind::RandomExpr => FixtureKind::RandomExpr {
            calculus,
            k: need_usize(args.k, "--k")?,
            leaves: need_usize(args.leaves, "--leaves")?,
        },
        GenKind::RandomCotree => FixtureKind::RandomCotree {
            n: need_usize(args.n, "--n")?,
        },
    };
    let f = gen_fixture(FixtureSpec {
        kind: fixture_kind,
        seed: args.seed,
    })?;
    if let Some(td) = &f.td {
        if args.out.is_none() {
            return Err(Error::input("gen partial-k-tree writes two files and needs --out"));
        }
        return emit(args, &[("graph", "gr", f.graph.to_pace()), ("graph", "td", td.to_td())]);
    }
    if let Some(x) = &f.expr {
        return emit(args, &[("expr", expr_ext(x), x.to_text())]);
    }
    let t = f.cotree.expect("cotree fixture");
    emit(args, &[("cotree", "cot", format!("{t}\n"))])
}

fn expr_ext(x: &WidthExpr) -> &'static str {
    match x {
        WidthExpr::Cw(_) => "cwe",
        WidthExpr::Nlc(_) => "nlce",
    }
}

/// Prints the single file, or writes every file into `--out` and lists the paths.
fn emit(args: &Args, files: &[(&str, &str, String)]) -> Result<String> {
    let Some(dir) = &args.out else {
        return Ok(files[0].2.clone());
    };
    fs::create_dir_all(dir)?;
    let mut listing = String::new();
    for (stem, ext, text) in files {
        let path = dir.join(format!("{stem}-{}.{ext}", args.seed));
        fs::write(&path, text)?;
        listing.push_str(&format!("{}\n", path.display()));
    }
    Ok(listing)
}

/// Instances in `dir`, keyed by file stem: `.gr` + `.td` for the tree-width
/// route, `.cwe`/`.nlce`/`.expr` for expressions, `.cot` for co-trees.
fn batch(args: &Args, dir: &Path) -> Outcome {
    let Some(params) = requested(args.verb).filter(|_| args.verb != Verb::Oracle) else {
        return Outcome::fail(&Error::input("--batch works with alpha, omega, chi, theta, tau and all"));
    };
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => return Outcome::fail(&Error::input(format!("cannot read {}: {e}", dir.display()))),
    };
    let mut instances: BTreeMap<String, BTreeMap<String, PathBuf>> = BTreeMap::new();
    for entry in entries.flatten() {
        let path = entry.path();
        let (Some(stem), Some(ext)) = (path.file_stem(), path.extension()) else {
            continue;
        };
        let ext = ext.to_string_lossy().to_string();
        if ["gr", "td", "cwe", "nlce", "expr", "cot"].contains(&ext.as_str()) {
            instances
                .entry(stem.to_string_lossy().to_string())
                .or_default()
                .insert(ext, path);
        }
    }
    let results: Vec<(String, Result<Report>)> = instances
        .into_par_iter()
        .map(|(name, files)| {
            let one = Args {
                graph: files.get("gr").cloned(),
                td: files.get("td").cloned(),
                expr: ["cwe", "nlce", "expr"].iter().find_map(|e| files.get(*e).cloned()),
                cotree: files.get("cot").cloned(),
                tree: false,
                batch: None,
                ..args.clone()
            };
            let result = select_route(&one).and_then(|mut r| report(&mut r, params, args.oracle));
            (name, result)
        })
        .collect();

    let code = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().err().map(exit_code))
        .max()
        .unwrap_or(0);
    let mut stdout = String::new();
    let mut stderr = String::new();
    if args.json {
        let fields: Vec<String> = results
            .iter()
            .map(|(name, r)| {
                let value = match r {
                    Ok(rep) => serde_json::to_string(rep),
                    Err(e) => serde_json::to_string(&serde_json::json!({ "error": e.to_string() })),
                };
                format!(
                    "{}:{}",
                    serde_json::to_string(name).expect("names serialize"),
                    value.expect("values serialize")
                )
            })
            .collect();
        stdout = format!("{{{}}}\n", fields.join(","));
    }
    for (name, r) in &results {
        match r {
            Ok(rep) if !args.json => {
                let values: Vec<String> = rep.values().map(|v| v.to_string()).collect();
                stdout.push_str(&format!("{name} {}\n", values.join(" ")));
            }
            Ok(_) => {}
            Err(e) => stderr.push_str(&format!("{name}: error: {e}\n")),
        }
    }
    Outcome { code, stdout, stderr }
}
