//! Barks, unstable fragments and stable bridges of a subdivision.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::minor::topo::TopoSearch;
use crate::minor::SubdivisionMap;
use crate::structure::{bridges, Bridge};

/// `η(v)` together with the interior vertices of the segments ending there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bark {
    pub center: Vertex,
    pub vertices: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FragmentKind {
    VertexPlusSegment,
    TwoSegmentsSharedEnd,
    ThreeSegmentsAtDegree3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    pub kind: FragmentKind,
    /// The pattern vertex: the lone vertex, or the shared end.
    pub vertex: Vertex,
    /// The pattern edges whose segments make up the fragment.
    pub segments: Vec<Edge>,
    pub vertex_set: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    Unstable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeClassification {
    pub bridge: Bridge,
    pub status: Stability,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_fragment: Option<Fragment>,
}

fn segment_set(path: &[Vertex]) -> VertexSet {
    path.iter().copied().collect()
}

fn interior(path: &[Vertex]) -> VertexSet {
    segment_set(&path[1..path.len() - 1])
}

/// Pattern edges incident to each pattern vertex, as indices into `eta.segments`.
fn incidence(eta: &SubdivisionMap) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); eta.branch_vertices.len()];
    for (i, ((u, v), _)) in eta.segments.iter().enumerate() {
        inc[*u].push(i);
        inc[*v].push(i);
    }
    inc
}

pub fn barks(eta: &SubdivisionMap) -> Vec<Bark> {
    let inc = incidence(eta);
    eta.branch_vertices
        .iter()
        .enumerate()
        .map(|(v, &x)| {
            let mut vertices = VertexSet::singleton(x);
            for &i in &inc[v] {
                vertices |= interior(&eta.segments[i].1);
            }
            Bark { center: v, vertices }
        })
        .collect()
}

/// The bark containing host vertex `x`, if `x` lies on a branch vertex or a segment interior.
/// Interior vertices belong to two barks; the one at the smaller pattern end is returned.
pub fn bark_of(eta: &SubdivisionMap, x: Vertex) -> Option<Vertex> {
    barks(eta).into_iter().find(|b| b.vertices.contains(x)).map(|b| b.center)
}

pub fn enumerate_unstable_fragments(_host: &Graph, eta: &SubdivisionMap) -> Vec<Fragment> {
    let inc = incidence(eta);
    let segs = &eta.segments;
    let mut out = Vec::new();
    for (v, &x) in eta.branch_vertices.iter().enumerate() {
        for (e, path) in segs {
            out.push(Fragment {
                kind: FragmentKind::VertexPlusSegment,
                vertex: v,
                segments: vec![*e],
                vertex_set: segment_set(path) | VertexSet::singleton(x),
            });
        }
    }
    for (v, at) in inc.iter().enumerate() {
        for (a, &i) in at.iter().enumerate() {
            for &j in &at[a + 1..] {
                out.push(Fragment {
                    kind: FragmentKind::TwoSegmentsSharedEnd,
                    vertex: v,
                    segments: vec![segs[i].0, segs[j].0],
                    vertex_set: segment_set(&segs[i].1) | segment_set(&segs[j].1),
                });
            }
        }
        if at.len() == 3 {
            out.push(Fragment {
                kind: FragmentKind::ThreeSegmentsAtDegree3,
                vertex: v,
                segments: at.iter().map(|&i| segs[i].0).collect(),
                vertex_set: at.iter().fold(VertexSet::EMPTY, |s, &i| s | segment_set(&segs[i].1)),
            });
        }
    }
    out
}

pub fn classify_bridges(host: &Graph, eta: &SubdivisionMap) -> Vec<BridgeClassification> {
    let fragments = enumerate_unstable_fragments(host, eta);
    bridges(host, eta.image())
        .into_iter()
        .map(|bridge| {
            let witness = fragments.iter().find(|f| bridge.attachments.is_subset(f.vertex_set)).cloned();
            BridgeClassification {
                status: if witness.is_some() { Stability::Unstable } else { Stability::Stable },
                witness_fragment: witness,
                bridge,
            }
        })
        .collect()
}

pub fn all_bridges_stable(host: &Graph, eta: &SubdivisionMap) -> bool {
    let fragments = enumerate_unstable_fragments(host, eta);
    bridges(host, eta.image())
        .iter()
        .all(|b| !fragments.iter().any(|f| b.attachments.is_subset(f.vertex_set)))
}

/// No chord joins two vertices of the segment other than its own edges.
pub fn segments_induced(host: &Graph, eta: &SubdivisionMap) -> bool {
    eta.segments.iter().all(|(_, p)| host.induced_edge_count(segment_set(p)) == p.len() - 1)
}

pub fn is_spanning(host: &Graph, eta: &SubdivisionMap) -> bool {
    eta.image() == host.vertices()
}

/// A subdivision of `pattern` in `host` with induced segments and only stable bridges.
pub fn find_stable_subdivision(host: &Graph, pattern: &Graph) -> Option<SubdivisionMap> {
    let mut found = None;
    TopoSearch::new(host, pattern, true, |m| {
        if all_bridges_stable(host, m) {
            found = Some(m.clone());
            true
        } else {
            false
        }
    })
    .run();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::graph::Edit;
    use crate::minor::verify_subdivision;
    use crate::test_support::arb_graph;
    use proptest::prelude::*;

    fn e20_plus(attach: &[&str]) -> (Graph, Graph, SubdivisionMap) {
        let e = builtin("E20").unwrap();
        let host = e.graph.add_vertex(e.vertices(attach)).unwrap();
        let pattern = e.graph.without_labels();
        let eta = SubdivisionMap::identity(&pattern);
        (host, pattern, eta)
    }

    #[test]
    fn degree_three_fragments_of_e20() {
        let e = builtin("E20").unwrap();
        let eta = SubdivisionMap::identity(&e.graph);
        let mut centers: Vec<String> = enumerate_unstable_fragments(&e.graph, &eta)
            .iter()
            .filter(|f| f.kind == FragmentKind::ThreeSegmentsAtDegree3)
            .map(|f| e.graph.display_vertex(f.vertex))
            .collect();
        centers.sort();
        assert_eq!(centers, vec!["e3_1", "e3_2", "e3_3", "e4"]);
    }

    #[test]
    fn single_edge_segments_pair_up_at_shared_ends() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let eta = SubdivisionMap::identity(&g);
        let pairs: usize = (0..g.order()).map(|v| g.degree(v) * (g.degree(v) - 1) / 2).sum();
        let frags = enumerate_unstable_fragments(&g, &eta);
        assert_eq!(frags.iter().filter(|f| f.kind == FragmentKind::TwoSegmentsSharedEnd).count(), pairs);
        assert_eq!(frags.iter().filter(|f| f.kind == FragmentKind::VertexPlusSegment).count(), 5 * 6);
        let tri = Graph::complete(3).unwrap();
        let t = enumerate_unstable_fragments(&tri, &SubdivisionMap::identity(&tri));
        assert!(t.iter().all(|f| f.kind != FragmentKind::ThreeSegmentsAtDegree3));
    }

    #[test]
    fn e20_bridge_examples() {
        let (host, _, eta) = e20_plus(&["e3_1", "e2", "e4"]);
        let c = classify_bridges(&host, &eta);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].status, Stability::Unstable);
        assert!(c[0].witness_fragment.is_some());

        let (host, _, eta) = e20_plus(&["e0", "e3_1", "e3_2"]);
        let c = classify_bridges(&host, &eta);
        assert_eq!(c[0].status, Stability::Stable);
        assert!(c[0].witness_fragment.is_none());

        let e = builtin("E20").unwrap();
        assert!(classify_bridges(&e.graph, &SubdivisionMap::identity(&e.graph)).is_empty());
    }

    #[test]
    fn stable_subdivisions() {
        let f4 = builtin("F4").unwrap().graph;
        let m = find_stable_subdivision(&f4, &f4).unwrap();
        assert!(m.segments.iter().all(|(_, p)| p.len() == 2));
        assert!(classify_bridges(&f4, &m).is_empty());

        let (host, pattern, _) = e20_plus(&["e0", "e3_1", "e3_2", "e4"]);
        let m = find_stable_subdivision(&host, &pattern).unwrap();
        assert!(verify_subdivision(&host, &pattern, &m));
        assert!(segments_induced(&host, &m));
        assert!(classify_bridges(&host, &m).iter().all(|c| c.status == Stability::Stable));

        let planar = builtin("Wheel(9)").unwrap().graph;
        assert!(find_stable_subdivision(&planar, &f4).is_none());
    }

    #[test]
    fn spanning() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_spanning(&k4, &SubdivisionMap::identity(&k4)));
        let host = k4.add_vertex(VertexSet::singleton(0)).unwrap();
        assert!(!is_spanning(&host, &SubdivisionMap::identity(&k4)));
        let sub = k4.apply(&Edit::SubdivideEdge { u: 0, v: 1 }).unwrap();
        let m = crate::minor::has_topological_minor(&sub, &k4).unwrap();
        assert!(is_spanning(&sub, &m));
    }

    #[test]
    fn barks_cover_the_image() {
        let k4 = Graph::complete(4).unwrap();
        let mut sub = k4.clone();
        for (u, v) in k4.edges() {
            sub = sub.apply(&Edit::SubdivideEdge { u, v }).unwrap();
        }
        let m = crate::minor::has_topological_minor(&sub, &k4).unwrap();
        let b = barks(&m);
        assert_eq!(b.iter().fold(VertexSet::EMPTY, |s, b| s | b.vertices), m.image());
        assert!(b.iter().all(|b| b.vertices.len() == 4));
        assert_eq!(bark_of(&m, m.branch_vertices[2]), Some(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn found_subdivisions_are_stable_and_induced(host in arb_graph(5, 9), pattern in arb_graph(3, 5)) {
            if let Some(m) = find_stable_subdivision(&host, &pattern) {
                prop_assert!(verify_subdivision(&host, &pattern, &m));
                prop_assert!(segments_induced(&host, &m));
                prop_assert!(classify_bridges(&host, &m).iter().all(|c| c.status == Stability::Stable));
                let covered = barks(&m).iter().fold(VertexSet::EMPTY, |s, b| s | b.vertices);
                prop_assert_eq!(covered, m.image());
            }
        }

        #[test]
        fn classification_respects_relabelling(host in arb_graph(5, 9), pattern in arb_graph(3, 4), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let Some(m) = crate::minor::has_topological_minor(&host, &pattern) else { return Ok(()) };
            let mut perm: Vec<Vertex> = (0..host.order()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let moved = host.permuted(&perm);
            let mm = SubdivisionMap {
                branch_vertices: m.branch_vertices.iter().map(|&x| perm[x]).collect(),
                segments: m.segments.iter().map(|(e, p)| (*e, p.iter().map(|&x| perm[x]).collect())).collect(),
            };
            let a: Vec<Stability> = classify_bridges(&host, &m).iter().map(|c| c.status).collect();
            let mut b: Vec<(VertexSet, Stability)> = classify_bridges(&moved, &mm).iter().map(|c| (c.bridge.interior, c.status)).collect();
            let mut a2: Vec<(VertexSet, Stability)> = classify_bridges(&host, &m).iter().zip(a).map(|(c, s)| (c.bridge.interior.map(&perm), s)).collect();
            a2.sort_by_key(|x| x.0.bits());
            b.sort_by_key(|x| x.0.bits());
            prop_assert_eq!(a2, b);
        }

        #[test]
        fn bridges_on_four_branch_vertices(host in arb_graph(6, 10), pattern in arb_graph(4, 5)) {
            let Some(m) = crate::minor::has_topological_minor(&host, &pattern) else { return Ok(()) };
            for c in classify_bridges(&host, &m) {
                let centers: Option<Vec<Vertex>> = c.bridge.attachments.iter()
                    .map(|x| m.branch_vertices.iter().position(|&y| y == x))
                    .collect();
                let Some(centers) = centers else { continue };
                if centers.len() < 4 {
                    continue;
                }
                let star = centers.len() == 4 && centers.iter().any(|&u| {
                    pattern.degree(u) == 3 && centers.iter().all(|&w| w == u || pattern.has_edge(u, w))
                });
                prop_assert_eq!(c.status == Stability::Unstable, star);
            }
        }
    }
}
