//! Command-line front end. `run` returns the process exit status:
//! 0 on success, 1 when a verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::canon::{are_isomorphic, automorphism_group, find_isomorphism};
use crate::catalog::{all_builtins, builtin, load_collection, validate, NamedGraph, BUILTIN_NAMES};
use crate::connectivity::{is_internally_4_connected, is_k_connected, vertex_connectivity};
use crate::graph::{Graph, VertexSet};
use crate::io::{label_map_json, read_graph_file, to_edge_list, to_graph6};
use crate::lemmas::{statement_ids, Suite};
use crate::minor::{has_minor, has_topological_minor, is_hamiltonian, verify_certificate, Witness};
use crate::report::{default_reports_dir, write_reports, Status, VerificationReport, REPORTS_ENV};
use crate::splitter::split_classes;
use crate::structure::bridges;
use crate::subdivision::find_stable_subdivision;
use crate::sweep::{sweep, SweepSpec};

const CATALOG_PREFIX: &str = "catalog:";

#[derive(Debug, Parser)]
#[command(name = "minorsmith", version, about = "Graph minors, subdivisions and hamiltonicity for small graphs")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Does HOST contain PATTERN as a minor?
    Minor { host: String, pattern: String },
    /// Does HOST contain a subdivision of PATTERN?
    Topo {
        host: String,
        pattern: String,
        /// Require induced segments and only stable bridges.
        #[arg(long)]
        stable: bool,
    },
    /// Find a Hamilton cycle or report that none exists.
    Hamilton { graph: String },
    /// Vertex connectivity and a k-connectivity test.
    Connectivity {
        graph: String,
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Automorphism group order and generators.
    Aut { graph: String },
    /// Isomorphism test.
    Iso { g: String, h: String },
    /// Vertex splits up to isomorphism of the result.
    SplitEnum { graph: String },
    /// Bridges of the subgraph on the anchor vertices.
    Bridges {
        graph: String,
        /// Comma-separated labels or indices.
        #[arg(long)]
        anchor: String,
    },
    /// Builtin named graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run registered case analyses.
    Verify(VerifyArgs),
    /// Sweep a graph6 corpus as described by a JSON spec file.
    Sweep { spec: PathBuf },
    /// Re-encode a graph file.
    Convert {
        graph: String,
        #[arg(long, conflicts_with = "to_edgelist", required_unless_present = "to_edgelist")]
        to_graph6: bool,
        #[arg(long)]
        to_edgelist: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    /// Check every expectation of one builtin, all builtins, or a collection file.
    Validate {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        collection: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "all", conflicts_with = "all")]
    statement: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write JSON reports here; defaults to $MINORSMITH_REPORTS when set.
    #[arg(long)]
    reports: Option<PathBuf>,
    /// Leave out statements marked heavy.
    #[arg(long)]
    skip_heavy: bool,
    /// Collection file with the obstruction list; overrides $MINORSMITH_ALIST.
    #[arg(long)]
    alist: Option<PathBuf>,
}

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// `run` with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

struct Input {
    name: String,
    graph: Graph,
}

fn load(arg: &str) -> Result<Input, Failure> {
    if let Some(name) = arg.strip_prefix(CATALOG_PREFIX) {
        let ng = builtin(name)?;
        return Ok(Input { name: ng.name, graph: ng.graph });
    }
    let path = Path::new(arg);
    let graph = read_graph_file(path)?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| arg.to_string());
    Ok(Input { name, graph })
}

fn emit_json(out: Out, value: &impl serde::Serialize) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn vertex_list(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| g.display_vertex(v)).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli, out: Out) -> Result<i32, Failure> {
    match &cli.command {
        Command::Minor { host, pattern } => {
            let (h, p) = (load(host)?, load(pattern)?);
            let cert = has_minor(&h.graph, &p.graph);
            if cli.json {
                emit_json(out, &serde_json::json!({ "pattern": p.name, "found": cert.is_some(), "certificate": cert }))?;
            } else if let Some(c) = &cert {
                writeln!(out, "{} minor found", p.name)?;
                for (v, set) in c.branch_sets.iter().enumerate() {
                    writeln!(out, "  {} <- {}", p.graph.display_vertex(v), vertex_list(&h.graph, set.iter().copied()))?;
                }
            } else {
                writeln!(out, "no {} minor", p.name)?;
            }
            Ok(0)
        }
        Command::Topo { host, pattern, stable } => {
            let (h, p) = (load(host)?, load(pattern)?);
            let map = if *stable { find_stable_subdivision(&h.graph, &p.graph) } else { has_topological_minor(&h.graph, &p.graph) };
            let what = if *stable { "stable subdivision" } else { "subdivision" };
            if cli.json {
                emit_json(out, &serde_json::json!({ "pattern": p.name, "found": map.is_some(), "map": map }))?;
            } else if let Some(m) = &map {
                writeln!(out, "{} of {} found", what, p.name)?;
                for ((a, b), path) in &m.segments {
                    writeln!(out, "  {}-{}: {}", p.graph.display_vertex(*a), p.graph.display_vertex(*b), vertex_list(&h.graph, path.iter().copied()))?;
                }
            } else {
                writeln!(out, "no {} of {}", what, p.name)?;
            }
            Ok(0)
        }
        Command::Hamilton { graph } => {
            let g = load(graph)?.graph;
            let cycle = is_hamiltonian(&g);
            if cli.json {
                emit_json(out, &serde_json::json!({ "hamiltonian": cycle.is_some(), "cycle": cycle }))?;
            } else {
                match &cycle {
                    Some(c) => writeln!(out, "hamiltonian: {}", vertex_list(&g, c.order.iter().copied()))?,
                    None => writeln!(out, "non-hamiltonian")?,
                }
            }
            Ok(0)
        }
        Command::Connectivity { graph, k } => {
            let g = load(graph)?.graph;
            let kappa = vertex_connectivity(&g);
            let i4c = is_internally_4_connected(&g);
            let k_conn = k.map(|k| is_k_connected(&g, k));
            if cli.json {
                emit_json(out, &serde_json::json!({ "connectivity": kappa, "internally_4_connected": i4c, "k": k, "k_connected": k_conn }))?;
            } else {
                writeln!(out, "connectivity {kappa}")?;
                if let (Some(k), Some(yes)) = (k, k_conn) {
                    writeln!(out, "{}{k}-connected", if yes { "" } else { "not " })?;
                }
                writeln!(out, "internally 4-connected: {}", if i4c { "yes" } else { "no" })?;
            }
            Ok(0)
        }
        Command::Aut { graph } => {
            let g = load(graph)?.graph;
            let aut = automorphism_group(&g);
            let canonical = String::from_utf8_lossy(&aut.canonical_form).into_owned();
            if cli.json {
                emit_json(out, &serde_json::json!({ "order": aut.order.to_string(), "generators": aut.generators, "canonical_graph6": canonical }))?;
            } else {
                writeln!(out, "order {}", aut.order)?;
                writeln!(out, "canonical {canonical}")?;
                for p in &aut.generators {
                    writeln!(out, "  {}", vertex_list(&g, p.iter().copied()))?;
                }
            }
            Ok(0)
        }
        Command::Iso { g, h } => {
            let (a, b) = (load(g)?.graph, load(h)?.graph);
            let map = find_isomorphism(&a, &b);
            debug_assert_eq!(map.is_some(), are_isomorphic(&a, &b));
            if cli.json {
                emit_json(out, &serde_json::json!({ "isomorphic": map.is_some(), "map": map }))?;
            } else {
                match map {
                    Some(m) => writeln!(out, "isomorphic: {}", m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))?,
                    None => writeln!(out, "not isomorphic")?,
                }
            }
            Ok(0)
        }
        Command::SplitEnum { graph } => {
            let g = load(graph)?.graph;
            let classes = split_classes(&g);
            if cli.json {
                let rows: Vec<_> = classes
                    .iter()
                    .map(|(s, h)| serde_json::json!({ "vertex": s.vertex, "keep": s.keep.to_vec(), "moved": s.moved.to_vec(), "graph6": to_graph6(h) }))
                    .collect();
                emit_json(out, &rows)?;
            } else {
                writeln!(out, "{} splits up to isomorphism", classes.len())?;
                for (s, h) in &classes {
                    writeln!(
                        out,
                        "  {}: {{{}}} | {{{}}}  {}",
                        g.display_vertex(s.vertex),
                        vertex_list(&g, s.keep.iter()),
                        vertex_list(&g, s.moved.iter()),
                        to_graph6(h)
                    )?;
                }
            }
            Ok(0)
        }
        Command::Bridges { graph, anchor } => {
            let g = load(graph)?.graph;
            let h = parse_vertex_set(&g, anchor)?;
            let bs = bridges(&g, h);
            if cli.json {
                emit_json(out, &bs)?;
            } else {
                writeln!(out, "{} bridges", bs.len())?;
                for b in &bs {
                    writeln!(out, "  interior {{{}}} attachments {{{}}}", vertex_list(&g, b.interior.iter()), vertex_list(&g, b.attachments.iter()))?;
                }
            }
            Ok(0)
        }
        Command::Catalog { action } => catalog(action, cli.json, out),
        Command::Verify(args) => verify(args, cli.json, out),
        Command::Sweep { spec } => {
            let text = std::fs::read_to_string(spec).map_err(|e| Failure(2, format!("{}: {e}", spec.display())))?;
            let spec = SweepSpec::from_json(&text)?;
            let report = sweep(&spec)?;
            if cli.json {
                emit_json(out, &report)?;
            } else {
                for n in &report.notes {
                    writeln!(out, "{n}")?;
                }
                for c in report.failing_cases() {
                    writeln!(out, "{}\t{}", c.description, c.detail)?;
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Convert { graph, to_graph6: g6, .. } => {
            let g = load(graph)?.graph;
            if *g6 {
                writeln!(out, "{}", to_graph6(&g))?;
            } else {
                write!(out, "{}", to_edge_list(&g))?;
            }
            Ok(0)
        }
    }
}

fn parse_vertex_set(g: &Graph, text: &str) -> Result<VertexSet, Failure> {
    let mut s = VertexSet::EMPTY;
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = g
            .vertex_by_label(tok)
            .or_else(|| tok.parse().ok().filter(|&v: &usize| v < g.order()))
            .ok_or_else(|| Failure(2, format!("no vertex {tok:?}")))?;
        s.insert(v);
    }
    Ok(s)
}

fn print_report(out: Out, r: &VerificationReport) -> Result<(), Failure> {
    writeln!(out, "{}", r.summary_line())?;
    for c in r.failing_cases() {
        writeln!(out, "  FAIL {}: {}", c.description, c.detail)?;
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}")?;
    }
    Ok(())
}

fn catalog(action: &CatalogAction, json: bool, out: Out) -> Result<i32, Failure> {
    match action {
        CatalogAction::List => {
            for n in BUILTIN_NAMES {
                writeln!(out, "{n}")?;
            }
            Ok(0)
        }
        CatalogAction::Show { name } => {
            let ng = builtin(name)?;
            if json {
                emit_json(
                    out,
                    &serde_json::json!({
                        "name": ng.name,
                        "graph6": to_graph6(&ng.graph),
                        "labels": ng.labels(),
                        "expectations": ng.expectations,
                        "provenance": ng.provenance,
                    }),
                )?;
            } else {
                writeln!(out, "{}: {} vertices, {} edges", ng.name, ng.graph.order(), ng.graph.size())?;
                writeln!(out, "graph6 {}", to_graph6(&ng.graph))?;
                if let Some(labels) = label_map_json(&ng.graph) {
                    writeln!(out, "labels {}", labels.split_whitespace().collect::<Vec<_>>().join(" "))?;
                }
                let edges: Vec<String> =
                    ng.graph.edges().map(|(u, v)| format!("{}-{}", ng.graph.display_vertex(u), ng.graph.display_vertex(v))).collect();
                writeln!(out, "edges {}", edges.join(" "))?;
                writeln!(out, "expectations {}", serde_json::to_string(&ng.expectations)?)?;
            }
            Ok(0)
        }
        CatalogAction::Validate { name, collection } => {
            let graphs: Vec<NamedGraph> = match (name, collection) {
                (Some(n), _) => vec![builtin(n)?],
                (None, Some(p)) => load_collection(p)?,
                (None, None) => all_builtins(),
            };
            let reports: Vec<VerificationReport> = graphs.iter().map(validate).collect();
            if json {
                emit_json(out, &reports)?;
            } else {
                for r in &reports {
                    print_report(out, r)?;
                }
            }
            Ok(if reports.iter().all(|r| r.status != Status::Fail) { 0 } else { 1 })
        }
    }
}

fn verify(args: &VerifyArgs, json: bool, out: Out) -> Result<i32, Failure> {
    let mut suite = Suite::from_env()?;
    if let Some(p) = &args.alist {
        suite = suite.with_a_list(load_collection(p)?);
    }
    let reports = match &args.statement {
        Some(id) => {
            if !statement_ids().contains(id) {
                return Err(Failure(2, format!("unknown statement {id:?}; known: {}", statement_ids().join(", "))));
            }
            vec![suite.verify(id)?]
        }
        None => suite.verify_all(args.jobs, !args.skip_heavy)?,
    };
    let dir = args.reports.clone().or_else(|| std::env::var_os(REPORTS_ENV).map(|_| default_reports_dir()));
    if let Some(d) = &dir {
        write_reports(d, &reports).map_err(|e| Failure(2, format!("{}: {e}", d.display())))?;
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let missing = reports.iter().filter(|r| r.status == Status::DataMissing).count();
    if json {
        emit_json(out, &reports)?;
    } else {
        for r in &reports {
            print_report(out, r)?;
        }
        match (failed, missing) {
            (0, 0) => writeln!(out, "all statements passed")?,
            (0, m) => writeln!(out, "no failures; {m} statements lacked data")?,
            (f, _) => writeln!(out, "{f} statements failed")?,
        }
    }
    for r in &reports {
        for c in &r.cases {
            if let (Some(w), Some(g6)) = (&c.witness, &c.graph6) {
                let host = crate::io::from_graph6(g6)?;
                let pattern = c.witness_pattern.as_deref().and_then(|p| builtin(p).ok()).map(|ng| ng.graph);
                if !matches!(w, Witness::HamiltonCycle(_)) && pattern.is_none() {
                    continue;
                }
                if !verify_certificate(&host, w, pattern.as_ref()) {
                    return Err(Failure(1, format!("{}: witness for case {} does not verify", r.statement_id, c.index)));
                }
            }
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
