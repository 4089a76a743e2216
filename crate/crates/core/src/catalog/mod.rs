//! Named graphs with their vertex labels and machine-checkable expectations.

mod builtins;

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::automorphism_group;
use crate::connectivity::{is_internally_4_connected, is_k_connected};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::from_graph6;
use crate::minor::{has_minor, is_hamiltonian, verify_hamilton_cycle, verify_minor, HamiltonCycle, Witness};
use crate::report::{CaseOutcome, VerificationReport};
use crate::structure::{bipartition, has_triangle};

pub use builtins::{all_builtins, builtin, wheel, BUILTIN_NAMES};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog graph {0:?}")]
    UnknownName(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError { line: usize, column: usize, message: String },
    #[error("duplicate graph name {0:?}")]
    DuplicateName(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    PaperText,
    ExternalData,
}

/// Invariant claims about a named graph. Minor names refer to builtins.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expectations {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<u64>,
    /// The graph is k-connected for this k.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub internally_4_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite_odd: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle_free: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub must_contain_minors: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub must_not_contain_minors: Vec<String>,
    /// Cyclic label sequences that must be Hamilton cycles.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hamilton_cycles: Vec<Vec<String>>,
    /// Isomorphism classes of graphs obtained by one vertex split.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_classes: Option<usize>,
    /// Every member must contain at least one of these as a minor.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub must_contain_one_of: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    /// Carries the vertex labels.
    pub graph: Graph,
    pub expectations: Expectations,
    pub provenance: Provenance,
}

impl NamedGraph {
    pub fn vertex(&self, label: &str) -> Vertex {
        self.graph.vertex_by_label(label).unwrap_or_else(|| panic!("{} has no vertex {label:?}", self.name))
    }

    pub fn vertices(&self, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    /// Label → vertex map.
    pub fn labels(&self) -> BTreeMap<String, Vertex> {
        match self.graph.labels() {
            Some(l) => l.iter().enumerate().map(|(v, s)| (s.clone(), v)).collect(),
            None => (0..self.graph.order()).map(|v| (v.to_string(), v)).collect(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    name: String,
    n: Option<usize>,
    #[serde(default)]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    adjacency: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    graph6: Option<String>,
    #[serde(default)]
    labels: Option<BTreeMap<String, usize>>,
    #[serde(default)]
    expectations: Expectations,
}

fn perr(message: impl Into<String>) -> CatalogError {
    CatalogError::ParseError { line: 0, column: 0, message: message.into() }
}

fn entry_graph(e: &Entry) -> Result<Graph, CatalogError> {
    let g = if let Some(s) = &e.graph6 {
        from_graph6(s).map_err(|err| perr(format!("{}: {err}", e.name)))?
    } else if let Some(adj) = &e.adjacency {
        let n = e.n.unwrap_or(adj.len());
        if adj.len() != n {
            return Err(perr(format!("{}: {} adjacency rows for n = {n}", e.name, adj.len())));
        }
        for (u, row) in adj.iter().enumerate() {
            for &v in row {
                if v >= n || !adj[v].contains(&u) {
                    return Err(perr(format!("{}: adjacency entry {u} -> {v} is not symmetric", e.name)));
                }
            }
        }
        let edges: Vec<_> = adj.iter().enumerate().flat_map(|(u, r)| r.iter().filter(move |&&v| u < v).map(move |&v| (u, v))).collect();
        Graph::from_edges(n, &edges).map_err(|err| perr(format!("{}: {err}", e.name)))?
    } else if let Some(edges) = &e.edges {
        let n = e.n.ok_or_else(|| perr(format!("{}: edge list without n", e.name)))?;
        let mut seen = HashSet::new();
        for &(u, v) in edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(perr(format!("{}: duplicate edge {u} {v}", e.name)));
            }
        }
        Graph::from_edges(n, edges).map_err(|err| perr(format!("{}: {err}", e.name)))?
    } else {
        return Err(perr(format!("{}: needs one of graph6, adjacency or edges", e.name)));
    };
    if let Some(n) = e.n {
        if n != g.order() {
            return Err(perr(format!("{}: n = {n} but the graph has {} vertices", e.name, g.order())));
        }
    }
    match &e.labels {
        None => Ok(g),
        Some(map) => {
            let text = serde_json::to_string(map).expect("plain map");
            let labels = crate::io::parse_label_map(&text, g.order()).map_err(|err| perr(format!("{}: {err}", e.name)))?;
            g.with_labels(labels).map_err(|err| perr(format!("{}: {err}", e.name)))
        }
    }
}

pub fn parse_collection(text: &str) -> Result<Vec<NamedGraph>, CatalogError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let entries: Vec<Entry> = serde_json::from_str(text)
        .map_err(|e| CatalogError::ParseError { line: e.line(), column: e.column(), message: e.to_string() })?;
    let mut names = HashSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        if !names.insert(e.name.clone()) {
            return Err(CatalogError::DuplicateName(e.name));
        }
        out.push(NamedGraph {
            graph: entry_graph(&e)?,
            name: e.name,
            expectations: e.expectations,
            provenance: Provenance::ExternalData,
        });
    }
    Ok(out)
}

pub fn load_collection(path: &Path) -> Result<Vec<NamedGraph>, CatalogError> {
    parse_collection(&std::fs::read_to_string(path)?)
}

fn claim(report: &mut VerificationReport, description: String, passed: bool, detail: String, witness: Option<Witness>) {
    let mut case = CaseOutcome::new(report.cases.len(), description, passed, detail);
    if let Some(w) = witness {
        let pattern = matches!(w, Witness::Minor(_)).then(|| case.detail.clone());
        case = case.with_witness(w, pattern);
    }
    report.push(case);
    report.cases_total += 1;
}

/// Minor name → graph. Builtins only.
fn minor_target(name: &str) -> Option<Graph> {
    builtin(name).ok().map(|ng| ng.graph)
}

/// Checks every expectation of a named graph.
pub fn validate(ng: &NamedGraph) -> VerificationReport {
    let g = &ng.graph;
    let x = &ng.expectations;
    let mut r = VerificationReport::new(format!("catalog:{}", ng.name));
    r.cases.reserve(8);

    if let Some(labels) = g.labels() {
        let distinct: HashSet<&String> = labels.iter().collect();
        claim(&mut r, "labels are distinct".into(), distinct.len() == labels.len(), String::new(), None);
    }
    if let Some(n) = x.order {
        claim(&mut r, format!("order = {n}"), g.order() == n, format!("found {}", g.order()), None);
    }
    if let Some(m) = x.size {
        claim(&mut r, format!("size = {m}"), g.size() == m, format!("found {}", g.size()), None);
    }
    if let Some(a) = x.aut_order {
        let found = automorphism_group(g).order;
        claim(&mut r, format!("automorphism group order = {a}"), found == a.into(), format!("found {found}"), None);
    }
    if let Some(k) = x.connectivity {
        claim(&mut r, format!("{k}-connected"), is_k_connected(g, k), String::new(), None);
    }
    if let Some(want) = x.internally_4_connected {
        let found = is_internally_4_connected(g);
        claim(&mut r, format!("internally 4-connected = {want}"), found == want, format!("found {found}"), None);
    }
    if let Some(want) = x.hamiltonian {
        let cycle = is_hamiltonian(g);
        let ok = cycle.is_some() == want && cycle.as_ref().is_none_or(|c| verify_hamilton_cycle(g, c));
        claim(&mut r, format!("hamiltonian = {want}"), ok, format!("found {}", cycle.is_some()), cycle.map(Witness::HamiltonCycle));
    }
    if let Some(want) = x.bipartite_odd {
        let found = bipartition(g).is_some() && g.order() % 2 == 1;
        claim(&mut r, format!("bipartite with odd order = {want}"), found == want, format!("found {found}"), None);
    }
    if let Some(want) = x.triangle_free {
        let found = !has_triangle(g);
        claim(&mut r, format!("triangle-free = {want}"), found == want, format!("found {found}"), None);
    }
    for name in &x.must_contain_minors {
        minor_claim(&mut r, g, name, true);
    }
    for name in &x.must_not_contain_minors {
        minor_claim(&mut r, g, name, false);
    }
    if !x.must_contain_one_of.is_empty() {
        let mut hit = None;
        for name in &x.must_contain_one_of {
            if let Some(p) = minor_target(name) {
                if let Some(c) = has_minor(g, &p) {
                    if verify_minor(g, &p, &c) {
                        hit = Some((name.clone(), c));
                        break;
                    }
                }
            }
        }
        let desc = format!("contains one of {} as a minor", x.must_contain_one_of.join(", "));
        match hit {
            Some((name, c)) => claim(&mut r, desc, true, name, Some(Witness::Minor(c))),
            None => claim(&mut r, desc, false, "none found; data file suspect".into(), None),
        }
    }
    for seq in &x.hamilton_cycles {
        let order: Option<Vec<Vertex>> = seq.iter().map(|l| g.vertex_by_label(l)).collect();
        let desc = format!("{} is a Hamilton cycle", seq.join(" "));
        match order {
            Some(order) => {
                let c = HamiltonCycle { order };
                let ok = verify_hamilton_cycle(g, &c);
                claim(&mut r, desc, ok, String::new(), Some(Witness::HamiltonCycle(c)));
            }
            None => claim(&mut r, desc, false, "unknown label".into(), None),
        }
    }
    if let Some(k) = x.split_classes {
        let found = crate::splitter::split_classes(g).len();
        claim(&mut r, format!("{k} isomorphism classes of vertex splits"), found == k, format!("found {found}"), None);
    }
    r
}

fn minor_claim(r: &mut VerificationReport, g: &Graph, name: &str, want: bool) {
    let desc = if want { format!("has a {name} minor") } else { format!("has no {name} minor") };
    let Some(p) = minor_target(name) else {
        claim(r, desc, false, format!("unknown minor {name:?}"), None);
        return;
    };
    match has_minor(g, &p) {
        Some(c) => {
            let ok = want && verify_minor(g, &p, &c);
            claim(r, desc, ok, name.to_string(), Some(Witness::Minor(c)));
        }
        None => claim(r, desc, !want, "no minor".into(), None),
    }
}

#[cfg(test)]
mod tests;
