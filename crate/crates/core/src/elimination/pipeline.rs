//! Bottom-up circuit polynomial computation along a CR-tree, with per-step
//! reports, exhaustion handling and strategy comparison.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cache::PolyCache;
use super::cm::k4_circuit_polynomial;
use super::placement::{verify_vanishing, Verification};
use crate::crtree::{resultant_degree_bound, CrTree, TreeNode};
use crate::error::{GraphError, PolyError};
use crate::graph::{LabeledGraph, VertexId};
use crate::poly::{resultant_with, DeterminantBackend, DistVar, Exhaustion, MultiPoly, ResourceLimits, ResultantOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Completed,
    ResourceExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// The output is not homogeneous.
    Inhomogeneous,
    /// The output degree is below the value predicted from the inputs.
    BelowDegreeBound,
    /// Verification failed; the raw resultant may hold extra factors.
    NeedsFactorization,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub circuit: LabeledGraph,
    pub variable: DistVar,
    pub dimension: u32,
    pub left_homogeneous: Option<u32>,
    pub left_degree: u32,
    pub right_homogeneous: Option<u32>,
    pub right_degree: u32,
    pub predicted_homogeneous: Option<u32>,
    pub homogeneous_degree: Option<u32>,
    pub terms: usize,
    pub millis: f64,
    pub exhaustion: Option<Exhaustion>,
    pub flags: Vec<Flag>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EliminationReport {
    pub circuit: LabeledGraph,
    pub status: Status,
    pub exhaustion: Option<Exhaustion>,
    pub limits: ResourceLimits,
    pub backend: DeterminantBackend,
    /// Internal nodes in the order they were computed.
    pub steps: Vec<StepRecord>,
    /// Nodes whose polynomial came from the cache.
    pub cache_hits: usize,
    pub terms: Option<usize>,
    pub homogeneous_degree: Option<u32>,
    pub total_millis: f64,
    pub verification: Option<Verification>,
    pub flags: Vec<Flag>,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("resultant for {0} vanished identically")]
    Degenerate(LabeledGraph),
    #[error("resource exhausted: {}", .0.exhaustion.map(|e| e.to_string()).unwrap_or_default())]
    ResourceExhausted(Box<EliminationReport>),
}

impl PipelineError {
    pub fn report(&self) -> Option<&EliminationReport> {
        match self {
            PipelineError::ResourceExhausted(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub resultant: ResultantOptions,
    /// Number of placements for the final vanishing check; 0 skips it.
    pub verify_placements: usize,
    pub seed: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { resultant: ResultantOptions::default(), verify_placements: 20, seed: 0 }
    }
}

impl PipelineOptions {
    pub fn with_limits(self, limits: ResourceLimits) -> Self {
        PipelineOptions { resultant: ResultantOptions { limits, ..self.resultant }, ..self }
    }
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

struct Run<'a> {
    opts: &'a PipelineOptions,
    cache: &'a PolyCache,
    steps: Vec<StepRecord>,
    cache_hits: usize,
}

enum Stop {
    Exhausted(Exhaustion),
    Fail(PipelineError),
}

impl From<GraphError> for Stop {
    fn from(e: GraphError) -> Self {
        Stop::Fail(e.into())
    }
}

impl Run<'_> {
    fn node(&mut self, n: &TreeNode) -> Result<MultiPoly, Stop> {
        if n.truncated {
            return Err(Stop::Fail(GraphError::Precondition("tree has truncated nodes; expand it first".into()).into()));
        }
        if let Some(p) = self.cache.get(&n.circuit) {
            self.cache_hits += 1;
            return Ok(p);
        }
        let p = match &n.split {
            None => {
                let vs: Vec<VertexId> = n.circuit.vertices().iter().copied().collect();
                let quad: [VertexId; 4] = vs
                    .try_into()
                    .map_err(|_| GraphError::Precondition(format!("leaf {} is not a K4", n.circuit)))?;
                k4_circuit_polynomial(quad)?
            }
            Some(s) => {
                let f = self.node(&s.left)?;
                let g = self.node(&s.right)?;
                let x = DistVar::of_edge(s.edge);
                let (df, dg) = (f.degree_in(x), g.degree_in(x));
                let hf = f.homogeneous_degree().ok().flatten();
                let hg = g.homogeneous_degree().ok().flatten();
                let predicted = hf.zip(hg).map(|(hf, hg)| resultant_degree_bound(hf, df, hg, dg));
                let mut step = StepRecord {
                    circuit: n.circuit.clone(),
                    variable: x,
                    dimension: df + dg,
                    left_homogeneous: hf,
                    left_degree: df,
                    right_homogeneous: hg,
                    right_degree: dg,
                    predicted_homogeneous: predicted,
                    homogeneous_degree: None,
                    terms: 0,
                    millis: 0.0,
                    exhaustion: None,
                    flags: Vec::new(),
                };
                let t = Instant::now();
                let r = resultant_with(&f, &g, x, &self.opts.resultant);
                drop((f, g));
                let r = match r {
                    Ok(r) => r,
                    Err(PolyError::ResourceExhausted(ex)) => {
                        step.millis = millis(t);
                        step.exhaustion = Some(ex);
                        self.steps.push(step);
                        return Err(Stop::Exhausted(ex));
                    }
                    Err(e) => return Err(Stop::Fail(e.into())),
                };
                if r.is_zero() {
                    return Err(Stop::Fail(PipelineError::Degenerate(n.circuit.clone())));
                }
                let p = r.primitive_part().map_err(|e| Stop::Fail(e.into()))?;
                step.millis = millis(t);
                step.terms = p.term_count();
                step.homogeneous_degree = p.homogeneous_degree().ok().flatten();
                match (step.homogeneous_degree, predicted) {
                    (None, _) => step.flags.push(Flag::Inhomogeneous),
                    (Some(h), Some(b)) if h < b => step.flags.push(Flag::BelowDegreeBound),
                    _ => {}
                }
                self.steps.push(step);
                p
            }
        };
        self.cache.insert(&n.circuit, &p).map_err(|e| Stop::Fail(GraphError::Precondition(format!("cache write failed: {e}")).into()))?;
        Ok(p)
    }
}

/// Computes the polynomial of the root of a fully expanded tree: `K4`
/// polynomials at the leaves, primitive parts of resultants above them.
pub fn circuit_polynomial_with(
    tree: &CrTree,
    opts: &PipelineOptions,
    cache: &PolyCache,
) -> Result<(MultiPoly, EliminationReport), PipelineError> {
    let start = Instant::now();
    let mut run = Run { opts, cache, steps: Vec::new(), cache_hits: 0 };
    let outcome = run.node(&tree.root);
    let mut report = EliminationReport {
        circuit: tree.root.circuit.clone(),
        status: Status::Completed,
        exhaustion: None,
        limits: opts.resultant.limits,
        backend: opts.resultant.backend,
        steps: run.steps,
        cache_hits: run.cache_hits,
        terms: None,
        homogeneous_degree: None,
        total_millis: 0.0,
        verification: None,
        flags: Vec::new(),
    };
    let p = match outcome {
        Ok(p) => p,
        Err(Stop::Exhausted(ex)) => {
            report.status = Status::ResourceExhausted;
            report.exhaustion = Some(ex);
            report.total_millis = millis(start);
            return Err(PipelineError::ResourceExhausted(Box::new(report)));
        }
        Err(Stop::Fail(e)) => return Err(e),
    };
    report.total_millis = millis(start);
    report.terms = Some(p.term_count());
    report.homogeneous_degree = p.homogeneous_degree().ok().flatten();
    for s in &report.steps {
        for f in &s.flags {
            if !report.flags.contains(f) {
                report.flags.push(*f);
            }
        }
    }
    if opts.verify_placements > 0 {
        let v = verify_vanishing(&p, opts.verify_placements, opts.seed)?;
        if !v.passed() {
            report.flags.push(Flag::NeedsFactorization);
        }
        report.verification = Some(v);
    }
    Ok((p, report))
}

/// [`circuit_polynomial_with`] using default options and a fresh in-memory cache.
pub fn circuit_polynomial(tree: &CrTree) -> Result<(MultiPoly, EliminationReport), PipelineError> {
    circuit_polynomial_with(tree, &PipelineOptions::default(), &PolyCache::in_memory())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HardwareFingerprint {
    pub cpu: String,
    pub logical_cpus: usize,
    pub os: String,
    pub arch: String,
}

impl HardwareFingerprint {
    pub fn current() -> Self {
        let cpu = std::fs::read_to_string("/proc/cpuinfo")
            .ok()
            .and_then(|s| {
                s.lines()
                    .find(|l| l.starts_with("model name"))
                    .and_then(|l| l.split(':').nth(1))
                    .map(|m| m.trim().to_string())
            })
            .unwrap_or_else(|| "unknown".into());
        HardwareFingerprint {
            cpu,
            logical_cpus: std::thread::available_parallelism().map_or(1, |n| n.get()),
            os: std::env::consts::OS.into(),
            arch: std::env::consts::ARCH.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Strategy {
    pub name: String,
    pub tree: CrTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompareOptions {
    pub pipeline: PipelineOptions,
    pub repetitions: usize,
    pub jobs: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions { pipeline: PipelineOptions::default(), repetitions: 5, jobs: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrategyResult {
    pub name: String,
    pub status: Status,
    /// Median of the trials left after dropping the fastest and slowest.
    /// Trials time the elimination only, not the vanishing check.
    pub millis: f64,
    pub trials: Vec<f64>,
    pub report: Option<EliminationReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub circuit: LabeledGraph,
    pub limits: ResourceLimits,
    pub repetitions: usize,
    pub hardware: HardwareFingerprint,
    pub results: Vec<StrategyResult>,
}

/// Median after discarding the minimum and maximum when three or more values are present.
pub fn trimmed_median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let v = if v.len() >= 3 { &v[1..v.len() - 1] } else { &v[..] };
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

fn run_strategy(s: &Strategy, opts: &CompareOptions) -> StrategyResult {
    let mut trials = Vec::new();
    let mut report = None;
    for rep in 0..opts.repetitions.max(1) {
        let mut popts = opts.pipeline;
        if rep > 0 {
            popts.verify_placements = 0;
        }
        match circuit_polynomial_with(&s.tree, &popts, &PolyCache::in_memory()) {
            Ok((_, r)) => {
                trials.push(r.total_millis);
                if rep == 0 {
                    report = Some(r);
                }
            }
            Err(PipelineError::ResourceExhausted(r)) => {
                trials.push(r.total_millis);
                return StrategyResult {
                    name: s.name.clone(),
                    status: Status::ResourceExhausted,
                    millis: trimmed_median(&trials),
                    trials,
                    report: Some(*r),
                    error: None,
                };
            }
            Err(e) => {
                return StrategyResult {
                    name: s.name.clone(),
                    status: Status::ResourceExhausted,
                    millis: 0.0,
                    trials,
                    report: None,
                    error: Some(e.to_string()),
                }
            }
        }
    }
    StrategyResult { name: s.name.clone(), status: Status::Completed, millis: trimmed_median(&trials), trials, report, error: None }
}

/// Runs every strategy under the same caps. Failures are recorded per row.
pub fn compare_strategies(g: &LabeledGraph, strategies: &[Strategy], opts: &CompareOptions) -> Result<Comparison, GraphError> {
    for s in strategies {
        if s.tree.root.circuit != *g {
            return Err(GraphError::Precondition(format!("strategy {} is not rooted at the given circuit", s.name)));
        }
    }
    let jobs = opts.jobs.max(1);
    let mut results: Vec<Option<StrategyResult>> = vec![None; strategies.len()];
    for (chunk_idx, chunk) in strategies.chunks(jobs).enumerate() {
        let done: Vec<StrategyResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunk.iter().map(|s| scope.spawn(move || run_strategy(s, opts))).collect();
            handles.into_iter().map(|h| h.join().expect("strategy worker panicked")).collect()
        });
        for (i, r) in done.into_iter().enumerate() {
            results[chunk_idx * jobs + i] = Some(r);
        }
    }
    Ok(Comparison {
        circuit: g.clone(),
        limits: opts.pipeline.resultant.limits,
        repetitions: opts.repetitions,
        hardware: HardwareFingerprint::current(),
        results: results.into_iter().map(|r| r.expect("every strategy ran")).collect(),
    })
}

fn fmt_opt(v: Option<u32>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

/// Table of the steps of one elimination.
pub fn render_report(r: &EliminationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<4} {:>3} {:>8} {:>9} {:>10} {:>11} {:>11}  status", "step", "n", "var", "dimension", "hom.deg", "terms", "time (s)");
    for (i, s) in r.steps.iter().enumerate() {
        let status = match &s.exhaustion {
            Some(e) => format!("exhausted: {e}"),
            None if s.flags.is_empty() => "ok".into(),
            None => format!("{:?}", s.flags),
        };
        let hom = match s.exhaustion {
            Some(_) => format!("({})", fmt_opt(s.predicted_homogeneous)),
            None => fmt_opt(s.homogeneous_degree),
        };
        let _ = writeln!(
            out,
            "{:<4} {:>3} {:>8} {:>9} {:>10} {:>11} {:>11.3}  {}",
            i + 1,
            s.circuit.vertex_count(),
            s.variable.to_string(),
            format!("{0}x{0}", s.dimension),
            hom,
            if s.exhaustion.is_some() { "-".into() } else { s.terms.to_string() },
            s.millis / 1e3,
            status
        );
    }
    let _ = writeln!(
        out,
        "result: {:?}, {} terms, homogeneous degree {}, {:.3} s, {} cache hits",
        r.status,
        r.terms.map_or("-".into(), |t| t.to_string()),
        fmt_opt(r.homogeneous_degree),
        r.total_millis / 1e3,
        r.cache_hits
    );
    if let Some(v) = &r.verification {
        let _ = writeln!(out, "vanishing: {}/{} placements, nontrivial: {}", v.vanished, v.placements, v.nontrivial);
    }
    out
}

/// One row per strategy: final step dimension, degree, terms, time and status.
pub fn render_comparison(c: &Comparison) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "circuit {} ({} vertices)", c.circuit, c.circuit.vertex_count());
    let _ = writeln!(out, "{:<20} {:>9} {:>8} {:>11} {:>11}  status", "strategy", "dimension", "hom.deg", "terms", "time (s)");
    for r in &c.results {
        let last = r.report.as_ref().and_then(|rep| rep.steps.last());
        let status = match (&r.error, r.status, r.report.as_ref().and_then(|x| x.exhaustion)) {
            (Some(e), _, _) => format!("error: {e}"),
            (None, Status::ResourceExhausted, Some(e)) => format!("exhausted: {e}"),
            (None, s, _) => format!("{s:?}"),
        };
        let _ = writeln!(
            out,
            "{:<20} {:>9} {:>8} {:>11} {:>11.3}  {}",
            r.name,
            last.map_or("-".into(), |s| format!("{0}x{0}", s.dimension)),
            match r.status {
                Status::Completed => fmt_opt(r.report.as_ref().and_then(|x| x.homogeneous_degree)),
                Status::ResourceExhausted => "-".into(),
            },
            r.report.as_ref().and_then(|x| x.terms).map_or("-".into(), |t| t.to_string()),
            r.millis / 1e3,
            status
        );
    }
    let _ = writeln!(out, "hardware: {} ({} cpus, {}/{})", c.hardware.cpu, c.hardware.logical_cpus, c.hardware.os, c.hardware.arch);
    out
}
