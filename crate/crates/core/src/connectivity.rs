//! Vertex connectivity by cut enumeration, with a max-flow cross-check.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};

/// Calls `f` on every `k`-subset of `pool` in lexicographic order until it returns true.
pub fn any_subset(pool: VertexSet, k: usize, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    fn go(items: &[Vertex], k: usize, cur: VertexSet, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
        if k == 0 {
            return f(cur);
        }
        if items.len() < k {
            return false;
        }
        for i in 0..=items.len() - k {
            let mut next = cur;
            next.insert(items[i]);
            if go(&items[i + 1..], k - 1, next, f) {
                return true;
            }
        }
        false
    }
    go(&pool.to_vec(), k, VertexSet::EMPTY, f)
}

/// Whether removing `cut` leaves a disconnected graph.
pub fn is_separating(g: &Graph, cut: VertexSet) -> bool {
    !g.is_connected_within(g.vertices() - cut)
}

/// Every separating vertex set of exactly `k` vertices.
pub fn cuts_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    any_subset(g.vertices(), k, &mut |s| {
        if is_separating(g, s) {
            out.push(s);
        }
        false
    });
    out
}

/// `|V| > k` and no vertex set of size `< k` disconnects `g`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.order() <= k {
        return false;
    }
    (0..k).all(|j| !any_subset(g.vertices(), j, &mut |s| is_separating(g, s)))
}

/// Largest `k` with `g` k-connected, by cut enumeration.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let mut k = 0;
    while is_k_connected(g, k + 1) {
        k += 1;
    }
    k
}

pub fn is_internally_4_connected(g: &Graph) -> bool {
    if g.order() < 5 || !is_k_connected(g, 3) {
        return false;
    }
    if is_k33(g) {
        return true;
    }
    cuts_of_size(g, 3).into_iter().all(|s| {
        if !g.is_independent(s) {
            return false;
        }
        let comps = g.components_within(g.vertices() - s);
        comps.len() == 2 && comps.iter().any(|c| c.len() == 1)
    })
}

fn is_k33(g: &Graph) -> bool {
    g.order() == 6
        && g.size() == 9
        && (0..6).all(|v| g.degree(v) == 3)
        && crate::structure::is_bipartite(g)
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent `s`, `t`,
/// by unit-capacity augmenting paths on the split digraph.
pub fn local_vertex_connectivity(g: &Graph, s: Vertex, t: Vertex) -> usize {
    let n = g.order();
    // node 2v is v_in, 2v+1 is v_out; cap[(a,b)] stored in a dense matrix
    let size = 2 * n;
    let mut cap = vec![0i32; size * size];
    let idx = |a: usize, b: usize| a * size + b;
    for v in 0..n {
        cap[idx(2 * v, 2 * v + 1)] = if v == s || v == t { n as i32 } else { 1 };
        for w in g.neighbors(v) {
            cap[idx(2 * v + 1, 2 * w)] = n as i32;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..size {
                if prev[b] == usize::MAX && cap[idx(a, b)] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap[idx(a, b)] -= 1;
            cap[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Connectivity via Menger: the minimum local connectivity over non-adjacent
/// pairs, or `n - 1` for complete graphs.
pub fn vertex_connectivity_flow(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n.saturating_sub(1);
    if n > 0 && !g.is_connected() {
        return 0;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let k34 = Graph::complete_bipartite(3, 4).unwrap();
        assert!(is_k_connected(&k34, 3));
        assert!(!is_k_connected(&k34, 4));
        assert!(!is_k_connected(&Graph::path(3).unwrap(), 2));
        assert!(is_k_connected(&Graph::complete(5).unwrap(), 4));
        assert!(!is_k_connected(&Graph::complete(5).unwrap(), 5));
    }

    #[test]
    fn internal_four_connectivity() {
        assert!(is_internally_4_connected(&Graph::complete_bipartite(3, 3).unwrap()));
        // two K4s glued on a triangle
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap();
        assert!(is_k_connected(&g, 3));
        assert!(!is_internally_4_connected(&g));
        assert!(is_internally_4_connected(&Graph::complete(5).unwrap()));
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!is_internally_4_connected(&prism));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn enumeration_agrees_with_flow(g in arb_graph(1, 10)) {
            prop_assert_eq!(vertex_connectivity(&g), vertex_connectivity_flow(&g));
        }
    }
}
