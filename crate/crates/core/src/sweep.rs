//! Filtered minor checks over graph6 corpora.

use std::io::Read;
use std::path::Path;
use std::sync::mpsc;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::builtin;
use crate::connectivity::{is_internally_4_connected, is_k_connected};
use crate::graph::Graph;
use crate::io::{parse_graph6_line, IoError};
use crate::minor::{has_minor, is_hamiltonian, verify_minor, Witness};
use crate::report::{CaseOutcome, SweepCounts, VerificationReport};

pub const DEFAULT_BUDGET_SECS: f64 = 10.0;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep spec: {0}")]
    Spec(String),
    #[error("record {record}: {source}")]
    Parse { record: usize, source: IoError },
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Filters {
    /// Keep only k-connected graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<usize>,
    pub internally_4_connected: bool,
    pub non_hamiltonian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// graph6 file (optionally gzipped), or `-` for stdin.
    pub source: String,
    #[serde(default)]
    pub filters: Filters,
    /// Builtin names; every one must be a minor of each filtered-in graph.
    pub check: Vec<String>,
    /// Per-graph wall-clock limit on the hamiltonicity filter and the minor checks.
    #[serde(default = "default_budget")]
    pub budget_secs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    /// List passing graphs with their certificates, not just failures.
    #[serde(default)]
    pub keep_witnesses: bool,
}

fn default_budget() -> f64 {
    DEFAULT_BUDGET_SECS
}

impl SweepSpec {
    pub fn new(source: impl Into<String>, check: &[&str]) -> Self {
        SweepSpec {
            source: source.into(),
            filters: Filters::default(),
            check: check.iter().map(|s| s.to_string()).collect(),
            budget_secs: DEFAULT_BUDGET_SECS,
            jobs: None,
            keep_witnesses: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, SweepError> {
        let spec: SweepSpec = serde_json::from_str(text).map_err(|e| SweepError::Spec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.budget_secs > 0.0 && self.budget_secs.is_finite()) {
            return Err(SweepError::Spec(format!("budget must be positive, got {}", self.budget_secs)));
        }
        if let (Some(lo), Some(hi)) = (self.filters.min_order, self.filters.max_order) {
            if lo > hi {
                return Err(SweepError::Spec(format!("min_order {lo} exceeds max_order {hi}")));
            }
        }
        self.patterns().map(|_| ())
    }

    fn patterns(&self) -> Result<Vec<(String, Graph)>, SweepError> {
        self.check
            .iter()
            .map(|name| builtin(name).map(|ng| (name.clone(), ng.graph)).map_err(|e| SweepError::Spec(e.to_string())))
            .collect()
    }
}

/// One graph6 record, kept verbatim.
#[derive(Debug, Clone)]
pub struct Record {
    pub index: usize,
    pub text: String,
    pub graph: Graph,
}

pub fn parse_records(text: &str) -> Result<Vec<Record>, SweepError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let text = l.trim().to_string();
            let graph = parse_graph6_line(&text, i + 1).map_err(|source| SweepError::Parse { record: i + 1, source })?;
            Ok(Record { index: i + 1, text, graph })
        })
        .collect()
}

fn read_source(source: &str) -> Result<String, SweepError> {
    let err = |e| SweepError::Read { path: source_name(source), source: e };
    let mut text = String::new();
    if source == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(err)?;
    } else if source.ends_with(".gz") {
        let f = std::fs::File::open(Path::new(source)).map_err(err)?;
        flate2::read::GzDecoder::new(f).read_to_string(&mut text).map_err(err)?;
    } else {
        text = std::fs::read_to_string(source).map_err(err)?;
    }
    Ok(text)
}

fn source_name(source: &str) -> String {
    if source == "-" { "stdin".into() } else { source.into() }
}

/// Graph6 text, passed, detail and witnesses of a reported case.
type Listed = (String, bool, String, Vec<(String, Witness)>);

enum Outcome {
    FilteredOut,
    Passed(Vec<(String, Witness)>),
    Failed(String),
    TimedOut,
}

/// Runs `f` on a helper thread and gives up after `budget`; an abandoned
/// computation finishes in the background and its result is dropped.
fn within_budget<T: Send + 'static>(budget: Duration, f: impl FnOnce() -> T + Send + 'static) -> Option<T> {
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(budget).ok()
}

fn structural_filters(f: &Filters, g: &Graph) -> bool {
    f.min_order.is_none_or(|lo| g.order() >= lo)
        && f.max_order.is_none_or(|hi| g.order() <= hi)
        && f.connectivity.is_none_or(|k| is_k_connected(g, k))
        && (!f.internally_4_connected || is_internally_4_connected(g))
}

fn evaluate(spec: &SweepSpec, patterns: &[(String, Graph)], g: &Graph) -> Outcome {
    if !structural_filters(&spec.filters, g) {
        return Outcome::FilteredOut;
    }
    let (g, patterns, non_ham) = (g.clone(), patterns.to_vec(), spec.filters.non_hamiltonian);
    let run = move || {
        if non_ham && is_hamiltonian(&g).is_some() {
            return Outcome::FilteredOut;
        }
        let mut witnesses = Vec::new();
        for (name, p) in &patterns {
            match has_minor(&g, p) {
                Some(cert) if verify_minor(&g, p, &cert) => witnesses.push((name.clone(), Witness::Minor(cert))),
                Some(_) => return Outcome::Failed(format!("{name} certificate rejected")),
                None => return Outcome::Failed(format!("no {name} minor")),
            }
        }
        Outcome::Passed(witnesses)
    };
    within_budget(Duration::from_secs_f64(spec.budget_secs), run).unwrap_or(Outcome::TimedOut)
}

/// Sweeps already-parsed records. Listed cases are sorted by graph6 text, so
/// the report does not depend on record order or worker count.
pub fn sweep_records(spec: &SweepSpec, records: &[Record]) -> Result<VerificationReport, SweepError> {
    spec.validate()?;
    let patterns = spec.patterns()?;
    let jobs = spec.jobs.unwrap_or_else(rayon::current_num_threads).max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| SweepError::Pool(e.to_string()))?;
    let outcomes: Vec<Outcome> = pool.install(|| records.par_iter().map(|r| evaluate(spec, &patterns, &r.graph)).collect());

    let mut counts = SweepCounts { scanned: records.len(), ..Default::default() };
    let mut listed: Vec<Listed> = Vec::new();
    for (r, o) in records.iter().zip(outcomes) {
        match o {
            Outcome::FilteredOut => continue,
            Outcome::Passed(w) => {
                counts.passed += 1;
                if spec.keep_witnesses {
                    let names: Vec<&str> = w.iter().map(|(n, _)| n.as_str()).collect();
                    listed.push((r.text.clone(), true, format!("{} minor", names.join(", ")), w));
                }
            }
            Outcome::Failed(why) => {
                counts.failed += 1;
                listed.push((r.text.clone(), false, why, Vec::new()));
            }
            Outcome::TimedOut => {
                counts.timed_out += 1;
                listed.push((r.text.clone(), false, format!("exceeded {} s budget", spec.budget_secs), Vec::new()));
            }
        }
        counts.filtered_in += 1;
    }
    listed.sort_by(|a, b| (&a.0, &a.2).cmp(&(&b.0, &b.2)));

    let mut report = VerificationReport::new("sweep");
    report.cases_total = counts.filtered_in;
    for (text, passed, detail, witnesses) in listed {
        let mut case = CaseOutcome::new(report.cases.len(), text.clone(), passed, detail).with_graph6(text);
        // A case holds one witness; with several required minors the first is kept.
        if let Some((name, w)) = witnesses.into_iter().next() {
            case = case.with_witness(w, Some(name));
        }
        report.push(case);
    }
    report.notes.push(format!(
        "source {}: {} scanned, {} filtered in, {} passed, {} failed, {} timed out",
        source_name(&spec.source),
        counts.scanned,
        counts.filtered_in,
        counts.passed,
        counts.failed,
        counts.timed_out
    ));
    if counts.timed_out > 0 {
        report.fail(format!("{} graphs exceeded the budget", counts.timed_out));
    }
    report.sweep = Some(counts);
    Ok(report)
}

/// Reads `spec.source` and sweeps it.
pub fn sweep(spec: &SweepSpec) -> Result<VerificationReport, SweepError> {
    spec.validate()?;
    let records = parse_records(&read_source(&spec.source)?)?;
    sweep_records(spec, &records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::to_graph6;

    fn records(gs: &[Graph]) -> Vec<Record> {
        gs.iter().enumerate().map(|(i, g)| Record { index: i + 1, text: to_graph6(g), graph: g.clone() }).collect()
    }

    fn k4_minor_spec() -> SweepSpec {
        let mut spec = SweepSpec::new("-", &["K34"]);
        spec.filters = Filters { connectivity: Some(4), non_hamiltonian: true, ..Default::default() };
        spec
    }

    #[test]
    fn k45_passes() {
        let r = sweep_records(&k4_minor_spec(), &records(&[Graph::complete_bipartite(4, 5).unwrap()])).unwrap();
        assert_eq!(r.sweep, Some(SweepCounts { scanned: 1, filtered_in: 1, passed: 1, failed: 0, timed_out: 0 }));
        assert!(r.passed());
    }

    #[test]
    fn k44_is_filtered_out() {
        let r = sweep_records(&k4_minor_spec(), &records(&[Graph::complete_bipartite(4, 4).unwrap()])).unwrap();
        let c = r.sweep.unwrap();
        assert_eq!((c.scanned, c.filtered_in), (1, 0));
    }

    #[test]
    fn failures_are_emitted_verbatim() {
        let mut spec = SweepSpec::new("-", &["K34"]);
        spec.filters.non_hamiltonian = true;
        let star = Graph::complete_bipartite(1, 3).unwrap();
        let r = sweep_records(&spec, &records(std::slice::from_ref(&star))).unwrap();
        assert!(!r.passed());
        assert_eq!(r.sweep.unwrap().failed, 1);
        assert_eq!(r.counterexample.as_deref(), Some(to_graph6(&star).as_str()));
    }

    #[test]
    fn order_and_jobs_do_not_matter() {
        let gs: Vec<Graph> = (4..9).flat_map(|n| [Graph::cycle(n).unwrap(), Graph::complete_bipartite(2, n - 2).unwrap()]).collect();
        let mut spec = SweepSpec::new("-", &["K23"]);
        spec.filters = Filters { connectivity: Some(2), non_hamiltonian: true, ..Default::default() };
        spec.keep_witnesses = true;
        spec.jobs = Some(1);
        let a = sweep_records(&spec, &records(&gs)).unwrap();
        let mut rev = gs.clone();
        rev.reverse();
        spec.jobs = Some(3);
        let b = sweep_records(&spec, &records(&rev)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.passed() && a.sweep.unwrap().passed > 0);
    }

    #[test]
    fn spec_validation() {
        assert!(SweepSpec::from_json(r#"{"source":"-","check":["K34"],"budget_secs":0}"#).is_err());
        assert!(SweepSpec::from_json(r#"{"source":"-","check":["nope"]}"#).is_err());
        assert!(SweepSpec::from_json(r#"{"source":"-","check":[],"filters":{"min_order":5,"max_order":4}}"#).is_err());
        let s = SweepSpec::from_json(r#"{"source":"x.g6","check":["K34"],"filters":{"connectivity":4,"non_hamiltonian":true}}"#).unwrap();
        assert_eq!(s.budget_secs, DEFAULT_BUDGET_SECS);
    }

    #[test]
    fn parse_errors_carry_the_record() {
        match parse_records("C~\n\nC!\n") {
            Err(SweepError::Parse { record, .. }) => assert_eq!(record, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tiny_budget_times_out() {
        let mut spec = SweepSpec::new("-", &["E20"]);
        spec.budget_secs = 1e-9;
        let r = sweep_records(&spec, &records(&[Graph::complete(12).unwrap()])).unwrap();
        let c = r.sweep.unwrap();
        assert_eq!(c.timed_out + c.passed, 1);
        if c.timed_out == 1 {
            assert!(!r.passed());
        }
    }
}
