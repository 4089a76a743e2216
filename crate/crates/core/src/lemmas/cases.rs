//! Case generators: the finite families a statement quantifies over.

use serde::{Deserialize, Serialize};

use crate::canon::Perm;
use crate::graph::{normalize_edge, Edge, Edit, Graph, SplitSpec, Vertex, VertexSet};
use crate::orbits::Action;

/// What a case was built from, in base-graph coordinates. Structured
/// parameters are reduced by orbits of the base automorphism group;
/// `Opaque` cases are reduced by isomorphism of the case graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Param {
    Set(VertexSet),
    Split(SplitSpec),
    EdgePair(Edge, Edge),
    /// `w1 u1 u2 w2`, stored in the smaller of its two orientations.
    Path([Vertex; 4]),
    Opaque,
}

impl Param {
    pub fn edge_pair(a: Edge, b: Edge) -> Self {
        let (a, b) = (normalize_edge(a.0, a.1), normalize_edge(b.0, b.1));
        if a <= b {
            Param::EdgePair(a, b)
        } else {
            Param::EdgePair(b, a)
        }
    }

    pub fn path(p: [Vertex; 4]) -> Self {
        let r = [p[3], p[2], p[1], p[0]];
        Param::Path(if p <= r { p } else { r })
    }

    pub fn is_structured(&self) -> bool {
        !matches!(self, Param::Opaque)
    }
}

pub struct ParamAction;

impl Action<Param> for ParamAction {
    fn act(&self, perm: &Perm, p: &Param) -> Param {
        match p {
            Param::Set(s) => Param::Set(s.map(perm)),
            Param::Split(s) => Param::Split(s.map(perm)),
            Param::EdgePair(a, b) => Param::edge_pair((perm[a.0], perm[a.1]), (perm[b.0], perm[b.1])),
            Param::Path(w) => Param::path(w.map(|x| perm[x])),
            Param::Opaque => Param::Opaque,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Case {
    pub description: String,
    pub graph: Graph,
    pub param: Param,
    /// Ruled out by an earlier statement; still checked, but not counted
    /// against the expected figure inventory.
    pub excluded: bool,
}

/// Which vertex subsets an apex may attach to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetFilter {
    All,
    Clique,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseGenerator {
    /// One vertex split, at any vertex or at the listed ones.
    Splits { at: Option<Vec<String>> },
    EdgeAdditions { pairs: Vec<(String, String)> },
    /// A new vertex joined to `k` vertices of the base.
    Apex { k: usize, filter: SetFilter },
    /// Subdivide two independent edges and join the new vertices.
    DoubleSubdivideAndJoin,
    /// Subdivide `u1u2` with `w3` and add `v ~ w1, w2, w3` for every path `w1 u1 u2 w2`.
    TAttach,
    /// Every supergraph on the same vertex set, then one split.
    EdgeSupersetsThenSplit,
    Custom { name: String },
}

pub(crate) fn set_string(g: &Graph, s: VertexSet) -> String {
    let names: Vec<String> = s.iter().map(|v| g.display_vertex(v)).collect();
    format!("{{{}}}", names.join(", "))
}

pub(crate) fn edge_string(g: &Graph, (u, v): Edge) -> String {
    format!("{}-{}", g.display_vertex(u), g.display_vertex(v))
}

/// Renames the most recently added vertex.
pub(crate) fn relabel_last(g: Graph, name: &str) -> Graph {
    match g.labels() {
        Some(l) => {
            let mut l = l.to_vec();
            *l.last_mut().unwrap() = name.to_string();
            g.with_labels(l).expect("same order")
        }
        None => g,
    }
}

pub(crate) fn split_string(g: &Graph, s: &SplitSpec) -> String {
    format!("split {} into {} | {}", g.display_vertex(s.vertex), set_string(g, s.keep), set_string(g, s.moved))
}

fn subsets(pool: VertexSet, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    crate::connectivity::any_subset(pool, k, &mut |s| {
        out.push(s);
        false
    });
    out
}

pub fn splits(base: &Graph, at: Option<VertexSet>) -> Vec<Case> {
    SplitSpec::all(base)
        .into_iter()
        .filter(|s| at.is_none_or(|a| a.contains(s.vertex)))
        .map(|s| Case {
            description: split_string(base, &s),
            graph: base.split(&s).expect("enumerated split"),
            param: Param::Split(s),
            excluded: false,
        })
        .collect()
}

pub fn edge_additions(base: &Graph, pairs: &[(Vertex, Vertex)]) -> Vec<Case> {
    pairs
        .iter()
        .map(|&(u, v)| Case {
            description: format!("add edge {}", edge_string(base, (u, v))),
            graph: base.apply(&Edit::AddEdge { u, v }).expect("pair is a non-edge"),
            param: Param::Set([u, v].into_iter().collect()),
            excluded: false,
        })
        .collect()
}

pub fn apex(base: &Graph, k: usize, filter: SetFilter) -> Vec<Case> {
    subsets(base.vertices(), k)
        .into_iter()
        .filter(|&s| match filter {
            SetFilter::All => true,
            SetFilter::Clique => base.induced_edge_count(s) == k * (k - 1) / 2,
            SetFilter::Independent => base.is_independent(s),
        })
        .map(|s| Case {
            description: format!("apex on S = {}", set_string(base, s)),
            graph: relabel_last(base.add_vertex(s).expect("room for one more vertex"), "v"),
            param: Param::Set(s),
            excluded: false,
        })
        .collect()
}

/// Subdivides `e1` and `e2` with new vertices and joins them.
pub fn double_subdivide_and_join(base: &Graph, e1: Edge, e2: Edge) -> Graph {
    let n = base.order();
    base.apply(&Edit::SubdivideEdge { u: e1.0, v: e1.1 })
        .and_then(|g| g.apply(&Edit::SubdivideEdge { u: e2.0, v: e2.1 }))
        .and_then(|g| g.apply(&Edit::AddEdge { u: n, v: n + 1 }))
        .expect("independent edges")
}

pub fn independent_edge_pairs(base: &Graph) -> Vec<Case> {
    let edges: Vec<Edge> = base.edges().collect();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if [a.0, a.1].iter().any(|x| *x == b.0 || *x == b.1) {
                continue;
            }
            out.push(Case {
                description: format!("join subdivisions of {} and {}", edge_string(base, a), edge_string(base, b)),
                graph: double_subdivide_and_join(base, a, b),
                param: Param::edge_pair(a, b),
                excluded: false,
            });
        }
    }
    out
}

pub fn t_attach(base: &Graph) -> Vec<Case> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (u1, u2) in base.edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
        for w1 in base.neighbors(u1) - VertexSet::singleton(u2) {
            for w2 in base.neighbors(u2) - VertexSet::singleton(u1) - VertexSet::singleton(w1) {
                let param = Param::path([w1, u1, u2, w2]);
                if !seen.insert(param.clone()) {
                    continue;
                }
                let n = base.order();
                let graph = base
                    .apply(&Edit::SubdivideEdge { u: u1, v: u2 })
                    .and_then(|g| g.add_vertex([w1, w2, n].into_iter().collect()))
                    .expect("path in base");
                let graph = relabel_last(graph, "v");
                out.push(Case {
                    description: format!(
                        "subdivide {} with w3, v ~ {}, {}, w3",
                        edge_string(base, (u1, u2)),
                        base.display_vertex(w1),
                        base.display_vertex(w2)
                    ),
                    graph,
                    param,
                    excluded: false,
                });
            }
        }
    }
    out
}

/// Visits every graph obtained from a supergraph of `base` on the same
/// vertex set by one split, with the added edges and the split.
pub fn for_each_superset_split(base: &Graph, mut f: impl FnMut(&[Edge], &SplitSpec, Graph)) {
    let base = base.clone().without_labels();
    let n = base.order();
    let non_edges: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !base.has_edge(u, v)).collect();
    assert!(non_edges.len() < 32, "too many non-edges to enumerate supersets");
    for mask in 0u32..1 << non_edges.len() {
        let added: Vec<Edge> = non_edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let mut g = base.clone();
        for &(u, v) in &added {
            g = g.apply(&Edit::AddEdge { u, v }).unwrap();
        }
        for s in SplitSpec::all(&g) {
            let h = g.split(&s).unwrap();
            f(&added, &s, h);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn edge_strings_use_labels() {
        let e = builtin("E20").unwrap();
        assert_eq!(edge_string(&e.graph, (e.vertex("e0"), e.vertex("e2"))), "e0-e2");
        assert_eq!(set_string(&e.graph, e.vertices(&["e0", "e4"])), "{e0, e4}");
    }

    #[test]
    fn generator_sizes() {
        let f4 = builtin("F4").unwrap().graph;
        assert_eq!(apex(&f4, 4, SetFilter::All).len(), 210);
        let k4 = crate::graph::Graph::complete(4).unwrap();
        assert_eq!(independent_edge_pairs(&k4).len(), 3);
        // w1 u1 u2 w2 paths in K4: 6 middle edges, 2 * 1 outer choices each
        assert_eq!(t_attach(&k4).len(), 12);
        let mut count = 0;
        for_each_superset_split(&crate::graph::Graph::cycle(4).unwrap(), |_, _, _| count += 1);
        // C4 + both chords is K4, which has no splits; nothing else has a degree-4 vertex
        assert_eq!(count, 0);
    }

    #[test]
    fn params_are_orientation_free() {
        assert_eq!(Param::path([1, 2, 3, 4]), Param::path([4, 3, 2, 1]));
        assert_eq!(Param::edge_pair((3, 2), (1, 0)), Param::edge_pair((0, 1), (2, 3)));
    }
}
