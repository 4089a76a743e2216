use crate::graph::{Graph, Vertex, VertexSet};

/// Injective map `φ` from pattern vertices to host vertices with every pattern
/// edge sent to a host edge. When the two graphs have the same order this is a
/// spanning-subgraph embedding.
pub fn spanning_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<Vertex>> {
    let k = pattern.order();
    if k > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut pd: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
    let mut hd: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
    pd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }

    let order = search_order(pattern);
    let max_deg = pattern.max_degree();
    // at_least[d] = host vertices of degree >= d
    let at_least: Vec<VertexSet> =
        (0..=max_deg).map(|d| (0..host.order()).filter(|&v| host.degree(v) >= d).collect()).collect();
    let mut phi = vec![usize::MAX; k];
    if extend(pattern, host, &order, 0, &mut phi, VertexSet::EMPTY, &at_least) {
        Some(phi)
    } else {
        None
    }
}

/// Highest degree first, then always the vertex with the most placed neighbours.
fn search_order(p: &Graph) -> Vec<Vertex> {
    let k = p.order();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let v = (p.vertices() - placed)
            .iter()
            .max_by(|&a, &b| {
                let ka = ((p.neighbors(a) & placed).len(), p.degree(a));
                let kb = ((p.neighbors(b) & placed).len(), p.degree(b));
                ka.cmp(&kb).then(b.cmp(&a))
            })
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

fn extend(
    p: &Graph,
    h: &Graph,
    order: &[Vertex],
    i: usize,
    phi: &mut [Vertex],
    used: VertexSet,
    at_least: &[VertexSet],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let mut cand = at_least[p.degree(v)] - used;
    for q in p.neighbors(v) {
        if phi[q] != usize::MAX {
            cand &= h.neighbors(phi[q]);
        }
    }
    for w in cand {
        phi[v] = w;
        if extend(p, h, order, i + 1, phi, used | VertexSet::singleton(w), at_least) {
            return true;
        }
    }
    phi[v] = usize::MAX;
    false
}
