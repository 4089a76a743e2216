//! Bipartiteness, girth, degree sequences and bridges of a subgraph.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralPredicates {
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub girth: Girth,
    pub has_triangle: bool,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

pub fn structural_predicates(g: &Graph) -> StructuralPredicates {
    StructuralPredicates {
        bipartition: bipartition(g),
        girth: girth(g),
        has_triangle: has_triangle(g),
        degree_sequence: degree_sequence(g),
    }
}

/// Two-colouring with the smallest vertex of each component on the first side.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = [VertexSet::EMPTY; 2];
    for comp in g.components() {
        let start = comp.first().expect("components are non-empty");
        let mut layer = VertexSet::singleton(start);
        let mut seen = layer;
        let mut parity = 0;
        while !layer.is_empty() {
            side[parity] |= layer;
            let next = g.boundary(layer) - seen;
            seen |= next;
            layer = next;
            parity ^= 1;
        }
    }
    for s in side {
        if !g.is_independent(s) {
            return None;
        }
    }
    Some((side[0], side[1]))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.neighbors(u).intersects(g.neighbors(v)))
}

/// Length of a shortest cycle, by BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// A component of `G - V(H)` together with its attachments on `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    pub interior: VertexSet,
    pub attachments: VertexSet,
    /// Edges from the interior to the attachments, as `(interior, attachment)`.
    pub edges: Vec<Edge>,
}

/// One bridge per component of `G - h`, ordered by smallest interior vertex.
pub fn bridges(g: &Graph, h: VertexSet) -> Vec<Bridge> {
    let rest = g.vertices() - h;
    g.components_within(rest)
        .into_iter()
        .map(|interior| {
            let mut edges = Vec::new();
            for v in interior {
                for a in g.neighbors(v) & h {
                    edges.push((v, a));
                }
            }
            Bridge { interior, attachments: g.boundary(interior) & h, edges }
        })
        .collect()
}

pub fn bridge_attachments_of(g: &Graph, h: VertexSet, v: Vertex) -> Option<VertexSet> {
    bridges(g, h).into_iter().find(|b| b.interior.contains(v)).map(|b| b.attachments)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::complete(4).unwrap()), Girth::Finite(3));
        assert_eq!(girth(&Graph::cycle(7).unwrap()), Girth::Finite(7));
        assert_eq!(girth(&Graph::path(5).unwrap()), Girth::Infinite);
        assert_eq!(girth(&Graph::complete_bipartite(3, 3).unwrap()), Girth::Finite(4));
        let petersen = crate::io::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(girth(&petersen), Girth::Finite(5));
    }

    #[test]
    fn bipartitions() {
        let (a, b) = bipartition(&Graph::complete_bipartite(3, 4).unwrap()).unwrap();
        assert_eq!((a.len(), b.len()), (3, 4));
        assert!(bipartition(&Graph::cycle(5).unwrap()).is_none());
        assert!(bipartition(&Graph::empty(3).unwrap()).is_some());
    }

    #[test]
    fn bridges_of_small_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let bs = bridges(&k4, VertexSet::from_iter([0, 1, 2]));
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].interior, VertexSet::singleton(3));
        assert_eq!(bs[0].attachments.len(), 3);

        // K23 with parts {0,1} and {2,3,4}; the 4-cycle 0-2-1-3 leaves vertex 4
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let bs = bridges(&k23, VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].attachments, VertexSet::from_iter([0, 1]));

        assert!(bridges(&k4, k4.vertices()).is_empty());
    }

    #[test]
    fn bridges_partition_the_complement() {
        let g = crate::io::from_graph6("IheA@GUAo").unwrap();
        let h = VertexSet::from_iter([0, 3, 7]);
        let union = bridges(&g, h).iter().fold(VertexSet::EMPTY, |a, b| a | b.interior);
        assert_eq!(union, g.vertices() - h);
    }
}
