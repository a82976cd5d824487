//! The `crtool` command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{admissible_pairs, connectivity_class, separating_pairs, ConnectivityClass};
use crate::crd::{crd_2splits, crd_3connected, crd_naive, isomorphism_classes, Crd, CrdRecord};
use crate::crtree::{enumerate_truncated_trees, expand_tree, strategy_cost, strategy_tree, CrStore, TreeMode};
use crate::elimination::{
    circuit_polynomial_with, compare_strategies, render_comparison, render_report, verify_vanishing, CompareOptions,
    Comparison, PipelineError, PipelineOptions, PolyCache, Status, Strategy,
};
use crate::error::{FormatError, GraphError};
use crate::fixtures::{circuit_by_name, named_circuits, RootChoice};
use crate::graph::{io as graph_io, Edge, LabeledGraph};
use crate::poly::{io as poly_io, DeterminantBackend, MultiPoly, ResourceLimits};
use crate::sparsity::{classify, find_circuit};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USER: u8 = 1;
pub const EXIT_EXHAUSTED: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;

/// Suite bundled with the binary.
pub const STANDARD_SUITE: &str = include_str!("../suites/standard.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "crtool", version, about = "Rigidity circuits, combinatorial resultant decompositions and circuit polynomials")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for placements used by verification.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on the number of terms of any polynomial.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    #[arg(long, global = true, default_value_t = 5)]
    pub repetitions: usize,
    /// Strategies run concurrently by `bench`.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Directory for cached circuit polynomials (overridden by CRTOOL_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeMode {
    Naive,
    Split,
    #[value(name = "3conn")]
    ThreeConn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TreeModeArg {
    Splits,
    Naive,
    Auto,
}

impl From<TreeModeArg> for TreeMode {
    fn from(m: TreeModeArg) -> Self {
        match m {
            TreeModeArg::Splits => TreeMode::SplitsOnly,
            TreeModeArg::Naive => TreeMode::Naive,
            TreeModeArg::Auto => TreeMode::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Minors,
    Bareiss,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sparsity and connectivity of a graph.
    Analyze { graph: String },
    /// List decompositions of a circuit.
    Decompose {
        graph: String,
        #[arg(long, value_enum, default_value = "naive")]
        mode: DecomposeMode,
    },
    /// Enumerate truncated CR-trees.
    Crtree {
        graph: String,
        #[arg(long, value_enum, default_value = "auto")]
        mode: TreeModeArg,
        /// Stop after this many trees.
        #[arg(long)]
        limit: Option<usize>,
        /// Also print the expanded tree and its predicted cost.
        #[arg(long)]
        expand: bool,
    },
    /// Compute a circuit polynomial.
    Poly {
        graph: String,
        #[arg(long, value_enum, default_value = "auto")]
        mode: TreeModeArg,
        /// Root decomposition as `COMMON:EDGE`, e.g. `4,5,6:4-6`.
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value = "minors")]
        backend: BackendArg,
        /// Placements for the vanishing check.
        #[arg(long, default_value_t = 20)]
        placements: usize,
        /// Time limit per resultant, in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        /// Write the polynomial here (`.crpoly` for binary, text otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a stored polynomial vanishes on random placements.
    Verify {
        poly: PathBuf,
        #[arg(long, default_value_t = 20)]
        placements: usize,
    },
    /// Run a benchmark suite (a JSON file or `standard`).
    Bench {
        #[arg(default_value = "standard")]
        suite: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("resource exhausted: {0}")]
    Exhausted(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::User(_) | CliError::Format(_) | CliError::Graph(_) => EXIT_USER,
            CliError::Exhausted(_) => EXIT_EXHAUSTED,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Graph(g) => CliError::Graph(g),
            PipelineError::ResourceExhausted(_) => CliError::Exhausted(e.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

/// A graph file path, or the name of a bundled circuit.
pub fn load_graph(spec: &str) -> Result<LabeledGraph, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::User(format!("{spec}: {e}")))?;
        return Ok(graph_io::parse_any(&text)?);
    }
    circuit_by_name(spec).ok_or_else(|| {
        let names: Vec<&str> = named_circuits().iter().map(|(n, _)| *n).collect();
        CliError::User(format!("{spec}: no such file or bundled graph (bundled: {})", names.join(", ")))
    })
}

fn parse_edge(s: &str) -> Result<Edge, CliError> {
    let bad = || CliError::User(format!("bad edge {s:?}, expected a-b"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    let (a, b) = (crate::graph::VertexId::new(a)?, crate::graph::VertexId::new(b)?);
    Ok(Edge::new(a, b)?)
}

/// `4,5,6:4-6` selects the decomposition sharing `{4,5,6}` that eliminates `x_{4,6}`.
pub fn parse_root(s: &str) -> Result<RootChoice, CliError> {
    let (common, edge) = s.split_once(':').ok_or_else(|| CliError::User(format!("bad root {s:?}, expected COMMON:EDGE")))?;
    let common: Vec<u32> = common
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::User(format!("bad vertex {x:?} in {s:?}"))))
        .collect::<Result<_, _>>()?;
    let e = parse_edge(edge)?;
    Ok(RootChoice::new(&common, e.u().get(), e.v().get()))
}

fn emit(format: Format, json: serde_json::Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("serializable"),
        Format::Text => text,
    }
}

#[derive(Serialize)]
struct Analysis {
    vertices: usize,
    edges: usize,
    sparsity: crate::sparsity::SparsityClass,
    circuit: bool,
    connectivity: Option<ConnectivityClass>,
    separating_pairs: Vec<(u32, u32)>,
    admissible_pairs: Vec<(u32, Edge)>,
    violation: Option<String>,
}

fn analyze(g: &LabeledGraph) -> Result<Analysis, CliError> {
    let sparsity = classify(g);
    let circuit = sparsity == crate::sparsity::SparsityClass::SpanningCircuit;
    let connectivity = connectivity_class(g).ok();
    let separating = if g.vertex_count() >= 4 && g.is_connected() {
        separating_pairs(g)?.iter().map(|p| (p.u.get(), p.v.get())).collect()
    } else {
        Vec::new()
    };
    let admissible = if circuit && connectivity == Some(ConnectivityClass::ThreeConnected) && g.vertex_count() >= 5 {
        admissible_pairs(g)?.into_iter().map(|(v, e)| (v.get(), e)).collect()
    } else {
        Vec::new()
    };
    let violation = (!circuit).then(|| {
        let (n, m) = (g.vertex_count(), g.edge_count());
        if m + 2 != 2 * n {
            format!("{m} edges on {n} vertices, a circuit needs 2n-2 = {}", (2 * n).saturating_sub(2))
        } else {
            match find_circuit(g) {
                Some(c) => format!(
                    "{} vertices span {} edges, more than 2k-3 = {} ({c})",
                    c.vertex_count(),
                    c.edge_count(),
                    2 * c.vertex_count() - 3
                ),
                None => "edges are independent".into(),
            }
        }
    });
    Ok(Analysis {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        sparsity,
        circuit,
        connectivity,
        separating_pairs: separating,
        admissible_pairs: admissible,
        violation,
    })
}

fn analysis_text(a: &Analysis) -> String {
    let conn = match a.connectivity {
        Some(ConnectivityClass::ThreeConnected) => "3-connected",
        Some(ConnectivityClass::TwoConnected) => "2-connected",
        Some(ConnectivityClass::OneConnected) => "1-connected",
        Some(ConnectivityClass::Disconnected) => "disconnected",
        None => "too small",
    };
    let mut s = match &a.violation {
        None => format!("circuit, {conn}"),
        Some(v) => format!("not a circuit ({v}), {conn}"),
    };
    if !a.separating_pairs.is_empty() {
        let ps: Vec<String> = a.separating_pairs.iter().map(|(u, v)| format!("{{{u},{v}}}")).collect();
        s.push_str(&format!(", separating pairs {}", ps.join(",")));
    }
    s.push_str(&format!("\nsparsity: {:?}, {} vertices, {} edges\n", a.sparsity, a.vertices, a.edges));
    if !a.admissible_pairs.is_empty() {
        let ps: Vec<String> = a.admissible_pairs.iter().map(|(v, e)| format!("({v}, {e})")).collect();
        s.push_str(&format!("admissible pairs: {}\n", ps.join(" ")));
    }
    s
}

fn decompose(g: &LabeledGraph, mode: DecomposeMode) -> Result<Vec<Crd>, CliError> {
    let class = connectivity_class(g)?;
    match (mode, class) {
        (DecomposeMode::Split, ConnectivityClass::ThreeConnected) => {
            Err(CliError::User("graph is 3-connected and has no 2-splits; use --mode 3conn".into()))
        }
        (DecomposeMode::ThreeConn, ConnectivityClass::TwoConnected) => {
            Err(CliError::User("graph is only 2-connected; use --mode split or --mode naive".into()))
        }
        (DecomposeMode::Split, _) => Ok(crd_2splits(g)?),
        (DecomposeMode::ThreeConn, _) => Ok(crd_3connected(g)?),
        (DecomposeMode::Naive, _) => Ok(crd_naive(g)?),
    }
}

fn limits(cli: &Cli, time_limit: Option<u64>) -> ResourceLimits {
    let mut l = ResourceLimits::default();
    if let Some(t) = cli.max_terms {
        l = l.with_max_terms(t);
    }
    if let Some(s) = time_limit {
        l = l.with_time_limit(std::time::Duration::from_secs(s));
    }
    l
}

/// One strategy of a bench case.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteStrategy {
    pub name: String,
    /// `COMMON:EDGE`, or absent for the default tree.
    #[serde(default)]
    pub root: Option<String>,
    #[serde(default = "default_tree_mode")]
    pub mode: TreeMode,
    /// `completed` or `resource_exhausted`.
    pub expect: Status,
    #[serde(default)]
    pub terms: Option<usize>,
}

fn default_tree_mode() -> TreeMode {
    TreeMode::Auto
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteCase {
    /// Bundled circuit name.
    pub graph: String,
    pub strategies: Vec<SuiteStrategy>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Suite {
    pub name: String,
    #[serde(default)]
    pub limits: Option<ResourceLimits>,
    #[serde(default)]
    pub cases: Vec<SuiteCase>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub graph: String,
    pub strategy: String,
    pub expected: Status,
    pub status: Status,
    pub terms: Option<usize>,
    pub expected_terms: Option<usize>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchOutcome {
    pub suite: String,
    pub comparisons: Vec<Comparison>,
    pub rows: Vec<BenchRow>,
}

impl BenchOutcome {
    pub fn exit_code(&self) -> u8 {
        if self.rows.iter().any(|r| r.expected == Status::Completed && r.status != Status::Completed) {
            EXIT_EXHAUSTED
        } else if self.rows.iter().all(|r| r.ok) {
            EXIT_OK
        } else {
            EXIT_INVARIANT
        }
    }
}

pub fn load_suite(spec: &str) -> Result<Suite, CliError> {
    let text = if spec == "standard" {
        STANDARD_SUITE.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| CliError::User(format!("{spec}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| FormatError::Json(e.to_string()).into())
}

pub fn run_suite(suite: &Suite, opts: &CompareOptions) -> Result<BenchOutcome, CliError> {
    let mut comparisons = Vec::new();
    let mut rows = Vec::new();
    for case in &suite.cases {
        let g = load_graph(&case.graph)?;
        let mut strategies = Vec::new();
        for s in &case.strategies {
            let crd = s.root.as_deref().map(|r| parse_root(r)?.find(&g).map_err(CliError::from)).transpose()?;
            let tree = strategy_tree(&mut CrStore::new(s.mode), &g, crd.as_ref())?;
            strategies.push(Strategy { name: s.name.clone(), tree });
        }
        let c = compare_strategies(&g, &strategies, opts)?;
        for (s, r) in case.strategies.iter().zip(&c.results) {
            let terms = r.report.as_ref().and_then(|x| x.terms);
            let verified = r.report.as_ref().is_none_or(|x| x.flags.is_empty());
            rows.push(BenchRow {
                graph: case.graph.clone(),
                strategy: s.name.clone(),
                expected: s.expect,
                status: r.status,
                terms,
                expected_terms: s.terms,
                ok: r.status == s.expect && r.error.is_none() && verified && (s.terms.is_none() || s.terms == terms),
            });
        }
        comparisons.push(c);
    }
    Ok(BenchOutcome { suite: suite.name.clone(), comparisons, rows })
}

fn bench_text(o: &BenchOutcome) -> String {
    let mut s = format!("suite {}\n", o.suite);
    for c in &o.comparisons {
        s.push('\n');
        s.push_str(&render_comparison(c));
    }
    s.push('\n');
    for r in &o.rows {
        s.push_str(&format!(
            "{} {} / {}: expected {:?}, got {:?}{}\n",
            if r.ok { "ok  " } else { "FAIL" },
            r.graph,
            r.strategy,
            r.expected,
            r.status,
            r.terms.map(|t| format!(", {t} terms")).unwrap_or_default()
        ));
    }
    s
}

fn write_poly(path: &Path, p: &MultiPoly) -> Result<(), CliError> {
    let io_err = |e: std::io::Error| CliError::User(format!("{}: {e}", path.display()));
    if path.extension().is_some_and(|x| x == "crpoly") {
        let f = std::fs::File::create(path).map_err(io_err)?;
        poly_io::write_binary(p, std::io::BufWriter::new(f)).map_err(io_err)
    } else {
        std::fs::write(path, poly_io::to_text(p)).map_err(io_err)
    }
}

fn read_poly(path: &Path) -> Result<MultiPoly, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::User(format!("{}: {e}", path.display())))?;
    if bytes.starts_with(b"CRPOLY") {
        Ok(poly_io::read_binary(&bytes[..])?)
    } else {
        Ok(poly_io::from_text(&String::from_utf8_lossy(&bytes))?)
    }
}

/// Runs one parsed command and returns its output and exit code.
pub fn execute(cli: &Cli) -> Result<(String, u8), CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Analyze { graph } => {
            let g = load_graph(graph)?;
            let a = analyze(&g)?;
            let text = analysis_text(&a);
            Ok((emit(f, serde_json::to_value(&a).expect("serializable"), text), EXIT_OK))
        }
        Command::Decompose { graph, mode } => {
            let g = load_graph(graph)?;
            let crds = decompose(&g, *mode)?;
            for c in &crds {
                c.validate(&g).map_err(|e| CliError::Invariant(e.to_string()))?;
            }
            let classes = isomorphism_classes(&g, &crds);
            let mut text = format!("{} decompositions in {} isomorphism classes\n", crds.len(), classes.len());
            for (k, class) in classes.iter().enumerate() {
                let c = &crds[class[0]];
                text.push_str(&format!(
                    "class {} (x{}): {}v {} + {}v {} on {} [{:?}]\n",
                    k + 1,
                    class.len(),
                    c.g1.vertex_count(),
                    c.g1,
                    c.g2.vertex_count(),
                    c.g2,
                    c.elimination_edge,
                    c.kind
                ));
            }
            let records: Vec<CrdRecord> = crds.iter().map(|c| CrdRecord::new(&g, c)).collect();
            let json = serde_json::json!({ "decompositions": records, "classes": classes });
            Ok((emit(f, json, text), EXIT_OK))
        }
        Command::Crtree { graph, mode, limit, expand } => {
            let g = load_graph(graph)?;
            let mut stream = enumerate_truncated_trees(&g, (*mode).into())?;
            let mut trees = Vec::new();
            for t in stream.by_ref().take(limit.unwrap_or(usize::MAX)) {
                let t = t?;
                t.check().map_err(CliError::Invariant)?;
                trees.push(t);
            }
            let mut text = String::new();
            let mut json_trees = Vec::new();
            for (i, t) in trees.iter().enumerate() {
                text.push_str(&format!("tree {} ({} nodes, {} truncated)\n{}", i + 1, t.node_count(), t.truncated_count(), t.render()));
                let mut entry = serde_json::json!({ "tree": t.to_json() });
                if *expand {
                    let full = expand_tree(stream.store(), t)?;
                    full.check().map_err(CliError::Invariant)?;
                    let cost = strategy_cost(&full, None)?;
                    text.push_str(&format!("expanded ({} nodes)\n{}", full.node_count(), full.render()));
                    for n in &cost.nodes {
                        text.push_str(&format!(
                            "  step {}v on {}: dimension {}, degree bound {}\n",
                            n.circuit.vertex_count(),
                            n.edge,
                            n.dimension.map_or("?".into(), |d| format!("{d}x{d}")),
                            n.homogeneous_bound.map_or("?".into(), |d| d.to_string())
                        ));
                    }
                    entry["expanded"] = full.to_json();
                    entry["cost"] = serde_json::to_value(&cost).expect("serializable");
                }
                json_trees.push(entry);
            }
            let json = serde_json::json!({ "trees": json_trees, "store": stream.store().to_json() });
            Ok((emit(f, json, text), EXIT_OK))
        }
        Command::Poly { graph, mode, root, backend, placements, time_limit, out } => {
            let g = load_graph(graph)?;
            let crd = root.as_deref().map(|r| parse_root(r)?.find(&g).map_err(CliError::from)).transpose()?;
            let tree = strategy_tree(&mut CrStore::new((*mode).into()), &g, crd.as_ref())?;
            let mut opts = PipelineOptions { verify_placements: *placements, seed: cli.seed, ..Default::default() }
                .with_limits(limits(cli, *time_limit));
            opts.resultant.backend = match backend {
                BackendArg::Minors => DeterminantBackend::Minors,
                BackendArg::Bareiss => DeterminantBackend::Bareiss,
            };
            let cache = PolyCache::from_env_or(cli.cache_dir.as_deref()).map_err(|e| CliError::User(format!("cache: {e}")))?;
            match circuit_polynomial_with(&tree, &opts, &cache) {
                Ok((p, report)) => {
                    if let Some(path) = out {
                        write_poly(path, &p)?;
                    }
                    let code = if report.flags.is_empty() { EXIT_OK } else { EXIT_INVARIANT };
                    let text = format!("{}{}", tree.render(), render_report(&report));
                    Ok((emit(f, serde_json::to_value(&report).expect("serializable"), text), code))
                }
                Err(PipelineError::ResourceExhausted(report)) => {
                    let text = format!("{}{}", tree.render(), render_report(&report));
                    Ok((emit(f, serde_json::to_value(&*report).expect("serializable"), text), EXIT_EXHAUSTED))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { poly, placements } => {
            let p = read_poly(poly)?;
            let v = verify_vanishing(&p, *placements, cli.seed)?;
            let text = format!(
                "{} terms, vanished on {}/{} placements, nontrivial: {}\n{}\n",
                p.term_count(),
                v.vanished,
                v.placements,
                v.nontrivial,
                if v.passed() { "ok" } else { "FAILED" }
            );
            let code = if v.passed() { EXIT_OK } else { EXIT_INVARIANT };
            Ok((emit(f, serde_json::to_value(&v).expect("serializable"), text), code))
        }
        Command::Bench { suite } => {
            let suite = load_suite(suite)?;
            let mut pipeline = PipelineOptions { seed: cli.seed, ..Default::default() };
            let mut l = suite.limits.unwrap_or_default();
            if let Some(t) = cli.max_terms {
                l = l.with_max_terms(t);
            }
            pipeline = pipeline.with_limits(l);
            let opts = CompareOptions { pipeline, repetitions: cli.repetitions, jobs: cli.jobs };
            let outcome = run_suite(&suite, &opts)?;
            let code = outcome.exit_code();
            Ok((emit(f, serde_json::to_value(&outcome).expect("serializable"), bench_text(&outcome)), code))
        }
    }
}

/// Parses `args`, runs the command and prints the result.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok((out, code)) => {
            println!("{}", out.trim_end());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<(String, u8), CliError> {
        let mut full = vec!["crtool"];
        full.extend_from_slice(args);
        execute(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn analyze_chain() {
        let (out, code) = run(&["analyze", "chain10"]).unwrap();
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("circuit, 2-connected, separating pairs {2,9},{3,8},{4,7}"), "{out}");
        let (out, _) = run(&["analyze", "k4"]).unwrap();
        assert!(out.starts_with("circuit, 3-connected"));
    }

    #[test]
    fn analyze_non_circuit() {
        let dir = std::env::temp_dir().join(format!("crtool-analyze-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.txt");
        std::fs::write(&path, "n 4\n1 2\n2 3\n3 4\n").unwrap();
        let (out, _) = run(&["analyze", path.to_str().unwrap()]).unwrap();
        assert!(out.starts_with("not a circuit (3 edges on 4 vertices"), "{out}");
        std::fs::write(&path, "n 4\n1 2\n2 3\n3 4\n1 5\n").unwrap();
        assert_eq!(run(&["analyze", path.to_str().unwrap()]).unwrap_err().exit_code(), EXIT_USER);
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn decompose_modes() {
        let (out, _) = run(&["decompose", "double-banana", "--mode", "naive"]).unwrap();
        assert!(out.contains("in 2 isomorphism classes"), "{out}");
        let (out, _) = run(&["decompose", "double-banana", "--mode", "split"]).unwrap();
        assert!(out.starts_with("1 decompositions"));
        let err = run(&["decompose", "w4", "--mode", "split"]).unwrap_err();
        assert!(err.to_string().contains("--mode 3conn"));
        assert_eq!(err.exit_code(), EXIT_USER);
    }

    #[test]
    fn unknown_graph_is_a_user_error() {
        assert_eq!(run(&["analyze", "no-such-graph"]).unwrap_err().exit_code(), EXIT_USER);
    }

    #[test]
    fn poly_exit_codes() {
        let (out, code) = run(&["--format", "json", "poly", "double-banana", "--placements", "3"]).unwrap();
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["terms"], 1752);
        let (_, code) = run(&["--max-terms", "50", "poly", "double-banana"]).unwrap();
        assert_eq!(code, EXIT_EXHAUSTED);
    }

    #[test]
    fn root_selector() {
        let r = parse_root("4,5,6:4-6").unwrap();
        assert_eq!(r, RootChoice::new(&[4, 5, 6], 4, 6));
        assert!(parse_root("4,5,6").is_err());
        assert!(parse_root("4,5,6:4-4").is_err());
    }

    #[test]
    fn empty_suite() {
        let suite = Suite { name: "empty".into(), limits: None, cases: Vec::new() };
        let o = run_suite(&suite, &CompareOptions::default()).unwrap();
        assert!(o.rows.is_empty());
        assert_eq!(o.exit_code(), EXIT_OK);
        assert!(load_suite("standard").unwrap().cases.len() >= 3);
    }

    #[test]
    fn bad_flags_exit_with_user_error() {
        assert_eq!(main_with_args(["crtool", "--format", "yaml", "analyze", "k4"]), ExitCode::from(EXIT_USER));
    }
}
