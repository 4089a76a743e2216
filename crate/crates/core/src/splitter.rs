//! One-edge extensions (edge additions and vertex splits) and reachability
//! between graphs through them.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, canonical_form};
use crate::connectivity::is_k_connected;
use crate::graph::{Edit, Graph, SplitSpec, VertexSet};
use crate::minor::{has_minor, has_topological_minor, SubdivisionMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum ExtensionKind {
    EdgeAddition { u: usize, v: usize },
    VertexSplit { vertex: usize, keep: Vec<usize>, moved: Vec<usize> },
}

impl ExtensionKind {
    pub fn split(spec: &SplitSpec) -> Self {
        ExtensionKind::VertexSplit { vertex: spec.vertex, keep: spec.keep.to_vec(), moved: spec.moved.to_vec() }
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph, crate::graph::GraphError> {
        match self {
            ExtensionKind::EdgeAddition { u, v } => g.apply(&Edit::AddEdge { u: *u, v: *v }),
            ExtensionKind::VertexSplit { vertex, keep, moved } => g.split(&SplitSpec::new(
                *vertex,
                keep.iter().copied().collect(),
                moved.iter().copied().collect(),
            )),
        }
    }
}

impl std::fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionKind::EdgeAddition { u, v } => write!(f, "add edge {u}-{v}"),
            ExtensionKind::VertexSplit { vertex, keep, moved } => write!(f, "split {vertex} into {keep:?} | {moved:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionStep {
    pub kind: ExtensionKind,
    /// graph6 of the canonical form of the result.
    pub result_canonical: String,
}

#[derive(Debug, Clone)]
pub struct Extensions {
    /// One representative per isomorphism class and move kind: edge additions first.
    pub steps: Vec<(ExtensionStep, Graph)>,
    pub edge_classes: usize,
    pub split_classes: usize,
}

fn canon_string(g: &Graph) -> String {
    String::from_utf8(canonical_form(g)).expect("graph6 is ASCII")
}

/// Representatives of the isomorphism classes of graphs obtained by one split.
pub fn split_classes(g: &Graph) -> Vec<(SplitSpec, Graph)> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for spec in SplitSpec::all(g) {
        let h = g.split(&spec).expect("enumerated splits are valid");
        if seen.insert(canonical_form(&h), ()).is_none() {
            out.push((spec, h));
        }
    }
    out
}

/// Every single extension of `g`, deduplicated up to isomorphism per move kind.
pub fn enumerate_extensions(g: &Graph) -> Extensions {
    let mut steps = Vec::new();
    let mut seen = HashMap::new();
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let h = g.apply(&Edit::AddEdge { u, v }).unwrap();
            let key = canon_string(&h);
            if seen.insert(key.clone(), ()).is_none() {
                steps.push((ExtensionStep { kind: ExtensionKind::EdgeAddition { u, v }, result_canonical: key }, h));
            }
        }
    }
    let edge_classes = steps.len();
    seen.clear();
    for (spec, h) in split_classes(g) {
        let key = canon_string(&h);
        steps.push((ExtensionStep { kind: ExtensionKind::split(&spec), result_canonical: key }, h));
    }
    let split_classes = steps.len() - edge_classes;
    Extensions { steps, edge_classes, split_classes }
}

/// Hub count of a wheel: `Some(k)` if `g` is a `k`-spoke wheel.
pub fn wheel_spokes(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 4 || g.size() != 2 * (n - 1) {
        return None;
    }
    (0..n).find_map(|hub| {
        let rim = g.vertices() - VertexSet::singleton(hub);
        let is_wheel = g.neighbors(hub) == rim
            && rim.iter().all(|v| (g.neighbors(v) & rim).len() == 2)
            && g.is_connected_within(rim);
        is_wheel.then_some(n - 1)
    })
}

/// Largest `k <= max_spokes` such that the `k`-spoke wheel is a minor of `g`.
pub fn largest_wheel_minor(g: &Graph, max_spokes: usize) -> Option<usize> {
    (3..=max_spokes.min(g.order().saturating_sub(1)))
        .rev()
        .find(|&k| has_minor(g, &crate::catalog::wheel(k).unwrap().graph.without_labels()).is_some())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reach {
    pub path: Option<Vec<ExtensionStep>>,
    /// Set when `start` is a wheel; the largest-wheel side condition is recorded, not enforced.
    pub start_wheel_spokes: Option<usize>,
    pub warnings: Vec<String>,
    pub states_explored: usize,
}

/// Breadth-first search over canonical forms for a shortest extension sequence
/// from `start` to a graph isomorphic to `target`.
pub fn splitter_reach(start: &Graph, target: &Graph, max_steps: usize) -> Reach {
    let mut warnings = Vec::new();
    for (name, g) in [("start", start), ("target", target)] {
        if !is_k_connected(g, 3) {
            warnings.push(format!("{name} is not 3-connected"));
        }
    }
    let mut reach = Reach { path: None, start_wheel_spokes: wheel_spokes(start), warnings, states_explored: 1 };
    if are_isomorphic(start, target) {
        reach.path = Some(Vec::new());
        return reach;
    }
    let (tn, tm) = (target.order(), target.size());
    if start.order() > tn || start.size() >= tm || tm - start.size() > max_steps {
        return reach;
    }
    let target_key = canon_string(target);
    let mut visited: HashMap<String, ()> = HashMap::from([(canon_string(start), ())]);
    let mut frontier: Vec<(Graph, Vec<ExtensionStep>)> = vec![(start.clone().without_labels(), Vec::new())];
    for _ in 0..max_steps {
        let expanded: Vec<Vec<(ExtensionStep, Graph)>> = frontier
            .par_iter()
            .map(|(g, _)| {
                enumerate_extensions(g)
                    .steps
                    .into_iter()
                    .filter(|(_, h)| h.order() <= tn && h.size() <= tm)
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for ((_, path), children) in frontier.iter().zip(expanded) {
            for (step, h) in children {
                if visited.insert(step.result_canonical.clone(), ()).is_some() {
                    continue;
                }
                reach.states_explored += 1;
                let mut p = path.clone();
                let done = step.result_canonical == target_key;
                p.push(step);
                if done {
                    reach.path = Some(p);
                    return reach;
                }
                next.push((h, p));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    reach
}

/// Replays a step sequence from `start`.
pub fn replay(start: &Graph, steps: &[ExtensionStep]) -> Result<Graph, crate::graph::GraphError> {
    let mut g = start.clone().without_labels();
    for s in steps {
        g = s.kind.apply(&g)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Promotion {
    pub has_minor: bool,
    /// A split of the pattern that is also a minor, when one exists.
    pub split_minor: Option<String>,
    pub subdivision: Option<SubdivisionMap>,
    pub holds: bool,
}

/// If `host` has a `pattern` minor but no minor obtained by splitting a vertex
/// of `pattern`, then `host` must contain a subdivision of `pattern`.
pub fn promotion_check(host: &Graph, pattern: &Graph) -> Promotion {
    let mut out = Promotion { has_minor: false, split_minor: None, subdivision: None, holds: true };
    if has_minor(host, pattern).is_none() {
        return out;
    }
    out.has_minor = true;
    for (spec, s) in split_classes(pattern) {
        if has_minor(host, &s).is_some() {
            out.split_minor = Some(format!("split of {} into {:?} | {:?}", spec.vertex, spec.keep, spec.moved));
            return out;
        }
    }
    out.subdivision = has_topological_minor(host, pattern);
    out.holds = out.subdivision.is_some();
    out
}

pub fn check_subdivision_promotion(host: &Graph, pattern: &Graph) -> bool {
    promotion_check(host, pattern).holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, wheel};

    #[test]
    fn k4_has_no_extensions() {
        let ext = enumerate_extensions(&Graph::complete(4).unwrap());
        assert_eq!((ext.edge_classes, ext.split_classes), (0, 0));
    }

    #[test]
    fn every_extension_adds_one_edge() {
        let g = builtin("E20").unwrap().graph;
        for (step, h) in enumerate_extensions(&g).steps {
            assert_eq!(h.size(), g.size() + 1);
            assert_eq!(step.result_canonical, canon_string(&h));
        }
    }

    #[test]
    fn wheel_to_k5_in_two_additions() {
        let w4 = wheel(4).unwrap().graph;
        assert_eq!(wheel_spokes(&w4), Some(4));
        let r = splitter_reach(&w4, &Graph::complete(5).unwrap(), 2);
        let path = r.path.unwrap();
        assert_eq!(path.len(), 2);
        assert!(path.iter().all(|s| matches!(s.kind, ExtensionKind::EdgeAddition { .. })));
        assert_eq!(r.start_wheel_spokes, Some(4));
        assert!(are_isomorphic(&replay(&w4, &path).unwrap(), &Graph::complete(5).unwrap()));
    }

    #[test]
    fn trivial_reach_cases() {
        let v8 = builtin("V8").unwrap().graph;
        assert_eq!(splitter_reach(&v8, &v8, 3).path, Some(Vec::new()));
        let k4 = Graph::complete(4).unwrap();
        assert!(splitter_reach(&k4, &Graph::complete(5).unwrap(), 10).path.is_none());
    }

    #[test]
    fn one_step_reach_for_each_extension() {
        let g = builtin("F4").unwrap().graph;
        for (_, h) in enumerate_extensions(&g).steps.into_iter().take(6) {
            assert_eq!(splitter_reach(&g, &h, 3).path.map(|p| p.len()), Some(1));
        }
    }

    #[test]
    fn promotion_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert!(check_subdivision_promotion(&k5, &Graph::complete(4).unwrap()));
        let e20 = builtin("E20").unwrap().graph.without_labels();
        let sub = e20.apply(&Edit::SubdivideEdge { u: 0, v: 4 }).unwrap();
        let p = promotion_check(&sub, &e20);
        assert!(p.has_minor && p.holds);
    }

    #[test]
    fn largest_wheel() {
        let w5 = wheel(5).unwrap().graph;
        assert_eq!(largest_wheel_minor(&w5, 8), Some(5));
    }

    use proptest::prelude::*;
    use crate::test_support::arb_graph;

    fn class_keys(g: &Graph) -> Vec<String> {
        let mut keys: Vec<String> = enumerate_extensions(g).steps.into_iter().map(|(s, _)| s.result_canonical).collect();
        keys.sort();
        keys
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn extensions_ignore_vertex_names(g in arb_graph(4, 7), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            let mut x = seed;
            for i in (1..perm.len()).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(class_keys(&g), class_keys(&g.permuted(&perm)));
        }

        #[test]
        fn v8_promotion_on_grown_hosts(ops in proptest::collection::vec((0usize..3, 0usize..64, 0usize..64), 0..4)) {
            let v8 = builtin("V8").unwrap().graph.without_labels();
            let mut h = v8.clone();
            for (kind, a, b) in ops {
                let edges: Vec<_> = h.edges().collect();
                let next = match kind {
                    0 => {
                        let (u, v) = edges[a % edges.len()];
                        let s = h.apply(&Edit::SubdivideEdge { u, v }).unwrap();
                        let x = s.order() - 1;
                        let w = b % x;
                        if w == u || w == v { continue; }
                        s.apply(&Edit::AddEdge { u: x, v: w }).unwrap()
                    }
                    1 => {
                        let specs = SplitSpec::all(&h);
                        if specs.is_empty() { continue; }
                        h.split(&specs[a % specs.len()]).unwrap()
                    }
                    _ => {
                        let (u, v) = (a % h.order(), b % h.order());
                        if u == v || h.has_edge(u, v) { continue; }
                        h.apply(&Edit::AddEdge { u, v }).unwrap()
                    }
                };
                if next.order() <= 12 && is_k_connected(&next, 3) {
                    h = next;
                }
            }
            let p = promotion_check(&h, &v8);
            prop_assert!(p.has_minor);
            prop_assert!(p.holds);
            if let Some(m) = &p.subdivision {
                prop_assert!(crate::minor::verify_subdivision(&h, &v8, m));
            }
        }
    }
}
