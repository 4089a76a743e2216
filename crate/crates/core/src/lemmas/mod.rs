//! Finite case analyses, each compiled to a case generator and a conclusion
//! checked by the minor engine.

pub mod cases;
mod registry;

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{automorphism_group, canonical_form};
use crate::catalog::{all_builtins, load_collection, CatalogError, NamedGraph};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;
use crate::minor::{has_minor, is_hamiltonian, verify_certificate, Witness};
use crate::orbits::orbits_under;
use crate::report::{CaseOutcome, Status, VerificationReport};
use crate::structure::bipartition;

pub use cases::{Case, CaseGenerator, Param, SetFilter};
pub use registry::registry;

/// Environment variable naming the obstruction list collection file.
pub const ALIST_ENV: &str = "MINORSMITH_ALIST";

#[derive(Debug, Error)]
pub enum LemmaError {
    #[error("unknown statement {0:?}")]
    UnknownStatement(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    /// The case graph contains at least one of these catalog graphs as a minor.
    AnyMinor { minors: Vec<String> },
    /// A `K34` minor unless the apex set has two adjacent vertices or is
    /// exceptional; exceptional sets must give `exceptional_minor`.
    ApexRule { exceptional: Vec<Vec<String>>, exceptional_minor: String, otherwise: String },
    NonHamiltonianBipartiteOdd,
    Hamiltonian,
    /// All cases are isomorphic, with this automorphism group order.
    SingleClass { aut_order: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Statement {
    pub id: String,
    pub claim: String,
    pub base: String,
    pub generator: CaseGenerator,
    pub conclusion: Conclusion,
    /// Number of symmetry classes the case analysis should produce.
    pub expected_cases: Option<usize>,
    /// Count symmetry classes as isomorphism classes of the case graphs
    /// rather than orbits of the generating parameter.
    pub reduce_by_isomorphism: bool,
    /// Vertex pairs already settled by an earlier statement; cases containing
    /// one are checked but not counted towards `expected_cases`.
    pub settled_pairs: Vec<(String, String)>,
    /// Minutes rather than seconds.
    pub heavy: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    #[default]
    Symmetry,
    /// Evaluate every generated case.
    Raw,
}

/// The graphs a run reads: the builtin catalog (overridable for fault
/// injection), the optional obstruction list and the small-graph corpus.
#[derive(Debug, Clone)]
pub struct Suite {
    pub catalog: BTreeMap<String, NamedGraph>,
    pub a_list: Option<Vec<NamedGraph>>,
    pub reduction: Reduction,
}

impl Default for Suite {
    fn default() -> Self {
        Suite {
            catalog: all_builtins().into_iter().map(|g| (g.name.clone(), g)).collect(),
            a_list: None,
            reduction: Reduction::Symmetry,
        }
    }
}

impl Suite {
    /// Builtins plus the obstruction list named by `MINORSMITH_ALIST`, if set.
    pub fn from_env() -> Result<Self, LemmaError> {
        let mut s = Suite::default();
        if let Some(p) = std::env::var_os(ALIST_ENV) {
            s.a_list = Some(load_collection(Path::new(&p))?);
        }
        Ok(s)
    }

    pub fn with_a_list(mut self, list: Vec<NamedGraph>) -> Self {
        self.a_list = Some(list);
        self
    }

    pub fn with_graph(mut self, g: NamedGraph) -> Self {
        self.catalog.insert(g.name.clone(), g);
        self
    }

    pub fn with_reduction(mut self, r: Reduction) -> Self {
        self.reduction = r;
        self
    }

    pub fn named(&self, name: &str) -> &NamedGraph {
        self.catalog.get(name).unwrap_or_else(|| panic!("catalog has no {name}"))
    }

    pub fn graph(&self, name: &str) -> &Graph {
        &self.named(name).graph
    }

    pub fn verify(&self, id: &str) -> Result<VerificationReport, LemmaError> {
        let st = registry().into_iter().find(|s| s.id == id).ok_or_else(|| LemmaError::UnknownStatement(id.into()))?;
        Ok(self.run(&st))
    }

    /// Runs every statement (optionally skipping heavy ones) on `jobs` workers;
    /// reports come back in registry order.
    pub fn verify_all(&self, jobs: usize, include_heavy: bool) -> Result<Vec<VerificationReport>, LemmaError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| LemmaError::Pool(e.to_string()))?;
        let statements: Vec<Statement> = registry().into_iter().filter(|s| include_heavy || !s.heavy).collect();
        Ok(pool.install(|| statements.par_iter().map(|s| self.run(s)).collect()))
    }

    pub fn run(&self, st: &Statement) -> VerificationReport {
        let start = Instant::now();
        let mut report = match registry::generate(self, st) {
            Generated::Cases(cases) => self.evaluate(st, cases),
            Generated::Classes(classes) => self.evaluate_classes(st, classes),
            Generated::Missing(why) => VerificationReport::data_missing(&st.id, why),
        };
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        report
    }

    fn evaluate(&self, st: &Statement, cases: Vec<Case>) -> VerificationReport {
        let base = self.graph(&st.base);
        let settled = self.settled_pairs(st);
        let excluded: Vec<bool> = cases.iter().map(|c| c.excluded || is_settled(&c.param, &settled)).collect();
        let total = cases.len();
        let classes: Vec<(usize, usize)> = match self.reduction {
            Reduction::Raw => (0..total).map(|i| (i, 1)).collect(),
            Reduction::Symmetry if !st.reduce_by_isomorphism && cases.iter().all(|c| c.param.is_structured()) => {
                let gens = automorphism_group(base).generators;
                let params: Vec<Param> = cases.iter().map(|c| c.param.clone()).collect();
                let index: HashMap<&Param, usize> = params.iter().enumerate().map(|(i, p)| (p, i)).collect();
                orbits_under(&gens, &params, &cases::ParamAction)
                    .into_iter()
                    .map(|o| (index[&o.representative], o.size))
                    .collect()
            }
            Reduction::Symmetry => iso_classes(cases.iter().map(|c| &c.graph)),
        };
        let reps: Vec<(Case, usize, bool)> = classes.iter().map(|&(i, n)| (cases[i].clone(), n, excluded[i])).collect();
        let mut r = self.finish(st, reps, total);
        if self.reduction == Reduction::Symmetry && !settled.is_empty() {
            let kept = classes.iter().filter(|&&(i, _)| !excluded[i]).count();
            r.notes.push(format!("{} classes before excluding settled pairs, {kept} after", classes.len()));
        }
        r
    }

    fn evaluate_classes(&self, st: &Statement, classes: Vec<(Case, usize)>) -> VerificationReport {
        let total = classes.iter().map(|c| c.1).sum();
        self.finish(st, classes.into_iter().map(|(c, n)| (c, n, false)).collect(), total)
    }

    fn finish(&self, st: &Statement, reps: Vec<(Case, usize, bool)>, total: usize) -> VerificationReport {
        let mut r = VerificationReport::new(&st.id);
        r.cases_total = total;
        r.expected_cases = st.expected_cases;
        if self.reduction == Reduction::Symmetry {
            r.cases_up_to_symmetry = Some(reps.len());
        }
        let outcomes: Vec<CaseOutcome> = reps
            .par_iter()
            .enumerate()
            .map(|(i, (case, n, _))| {
                let mut o = self.conclude(st, case).with_graph6(to_graph6(&case.graph));
                o.index = i;
                if self.reduction == Reduction::Symmetry {
                    o = o.with_orbit_size(*n);
                }
                o
            })
            .collect();
        for o in outcomes {
            r.push(o);
        }
        if let Conclusion::SingleClass { .. } = st.conclusion {
            let classes = iso_classes(reps.iter().map(|c| &c.0.graph)).len();
            if classes != 1 {
                r.fail(format!("cases fall into {classes} isomorphism classes"));
            }
        }
        if let (Some(want), Reduction::Symmetry) = (st.expected_cases, self.reduction) {
            let found = reps.iter().filter(|c| !c.2).count();
            if found != want {
                r.fail(format!("expected {want} cases up to symmetry, found {found}"));
            }
        }
        r
    }

    fn settled_pairs(&self, st: &Statement) -> Vec<VertexSet> {
        let base = self.named(&st.base);
        st.settled_pairs.iter().map(|(a, b)| base.vertices(&[a, b])).collect()
    }

    fn minor_check(&self, g: &Graph, names: &[String]) -> Option<(String, Witness)> {
        names.iter().find_map(|name| {
            let p = self.graph(name);
            let w = Witness::Minor(has_minor(g, p)?);
            verify_certificate(g, &w, Some(p)).then(|| (name.clone(), w))
        })
    }

    fn any_minor(&self, case: &Case, names: &[String]) -> CaseOutcome {
        match self.minor_check(&case.graph, names) {
            Some((name, w)) => CaseOutcome::new(0, &case.description, true, format!("{name} minor")).with_witness(w, Some(name)),
            None => CaseOutcome::new(0, &case.description, false, format!("no minor of {}", names.join(" or "))),
        }
    }

    fn conclude(&self, st: &Statement, case: &Case) -> CaseOutcome {
        let g = &case.graph;
        match &st.conclusion {
            Conclusion::AnyMinor { minors } => self.any_minor(case, minors),
            Conclusion::ApexRule { exceptional, exceptional_minor, otherwise } => {
                let base = self.named(&st.base);
                let Param::Set(s) = case.param else { unreachable!("apex cases carry their set") };
                let is_exceptional = exceptional.iter().any(|e| base.vertices(&e.iter().map(String::as_str).collect::<Vec<_>>()) == s);
                if is_exceptional {
                    return self.any_minor(case, std::slice::from_ref(exceptional_minor));
                }
                match self.minor_check(g, std::slice::from_ref(otherwise)) {
                    Some((name, w)) => CaseOutcome::new(0, &case.description, true, format!("{name} minor")).with_witness(w, Some(name)),
                    None if !base.graph.is_independent(s) => {
                        CaseOutcome::new(0, &case.description, true, format!("no {otherwise} minor; S has adjacent vertices"))
                    }
                    None => CaseOutcome::new(0, &case.description, false, format!("independent S without a {otherwise} minor")),
                }
            }
            Conclusion::NonHamiltonianBipartiteOdd => {
                let ham = is_hamiltonian(g);
                let bip = bipartition(g).is_some();
                let ok = ham.is_none() && bip && g.order() % 2 == 1;
                let detail = format!("hamiltonian = {}, bipartite = {bip}, order = {}", ham.is_some(), g.order());
                CaseOutcome::new(0, &case.description, ok, detail)
            }
            Conclusion::Hamiltonian => match is_hamiltonian(g) {
                Some(c) => {
                    let w = Witness::HamiltonCycle(c);
                    let ok = verify_certificate(g, &w, None);
                    CaseOutcome::new(0, &case.description, ok, "Hamilton cycle").with_witness(w, None)
                }
                None => CaseOutcome::new(0, &case.description, false, "no Hamilton cycle"),
            },
            Conclusion::SingleClass { aut_order } => {
                let found = automorphism_group(g).order;
                let ok = found == (*aut_order).into();
                CaseOutcome::new(0, &case.description, ok, format!("automorphism group order {found}"))
            }
        }
    }
}

pub(crate) enum Generated {
    Cases(Vec<Case>),
    /// Already reduced: representative and class size.
    Classes(Vec<(Case, usize)>),
    Missing(String),
}

/// `(first index, class size)` per isomorphism class, in input order.
fn iso_classes<'a>(graphs: impl Iterator<Item = &'a Graph>) -> Vec<(usize, usize)> {
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (i, g) in graphs.enumerate() {
        match index.get(&canonical_form(g)) {
            Some(&k) => out[k].1 += 1,
            None => {
                index.insert(canonical_form(g), out.len());
                out.push((i, 1));
            }
        }
    }
    out
}

/// True if some settled pair would be joined by contracting the case back
/// onto the base: a pair inside an apex set, or across two joined edges.
fn is_settled(param: &Param, settled: &[VertexSet]) -> bool {
    match param {
        Param::Set(s) if s.len() > 2 => settled.iter().any(|p| p.is_subset(*s)),
        Param::EdgePair(a, b) => {
            settled.iter().any(|p| [a.0, a.1].iter().any(|&x| [b.0, b.1].iter().any(|&y| *p == [x, y].into_iter().collect::<VertexSet>())))
        }
        _ => false,
    }
}

/// All reports passed or lacked data.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

pub fn statement_ids() -> Vec<String> {
    registry().into_iter().map(|s| s.id).collect()
}
