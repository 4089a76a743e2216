use crate::connectivity::is_k_connected;
use crate::graph::{Graph, Vertex, VertexSet};

use super::HamiltonCycle;

/// Exact Hamilton-cycle search by backtracking. Graphs on fewer than three
/// vertices are treated as non-hamiltonian.
pub fn is_hamiltonian(g: &Graph) -> Option<HamiltonCycle> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 || !is_k_connected(g, 2) {
        return None;
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut path = vec![start];
    if extend(g, start, VertexSet::singleton(start), &mut path) {
        Some(HamiltonCycle { order: path })
    } else {
        None
    }
}

fn extend(g: &Graph, start: Vertex, visited: VertexSet, path: &mut Vec<Vertex>) -> bool {
    let end = *path.last().unwrap();
    let rest = g.vertices() - visited;
    if rest.is_empty() {
        return g.has_edge(end, start);
    }
    if !g.neighbors(start).intersects(rest) || !g.neighbors(end).intersects(rest) {
        return false;
    }
    let open = rest | VertexSet::singleton(end) | VertexSet::singleton(start);
    let mut forced = None;
    for w in rest {
        let avail = g.neighbors(w) & open;
        match avail.len() {
            0 | 1 => return false,
            // w's two cycle neighbours are forced, so it must follow `end`
            2 if end != start && avail.contains(end) => {
                if forced.is_some_and(|f| f != w) {
                    return false;
                }
                forced = Some(w);
            }
            _ => {}
        }
    }
    if !g.is_connected_within(rest) {
        return false;
    }
    let mut cands: Vec<Vertex> = match forced {
        Some(w) => vec![w],
        None => (g.neighbors(end) & rest).to_vec(),
    };
    cands.sort_by_key(|&w| ((g.neighbors(w) & open).len(), w));
    for w in cands {
        path.push(w);
        if extend(g, start, visited | VertexSet::singleton(w), path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Held–Karp dynamic programme over subsets; `n <= 20`.
pub fn hamilton_held_karp(g: &Graph) -> Option<HamiltonCycle> {
    let n = g.order();
    assert!(n <= 20, "subset DP is limited to 20 vertices");
    if n < 3 {
        return None;
    }
    // reach[mask] = vertices v such that some path from 0 covers exactly mask and ends at v
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    reach[1] = 1;
    for mask in 1..full {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        let ends = reach[mask];
        for v in 0..n {
            if ends >> v & 1 == 0 {
                continue;
            }
            for w in g.neighbors(v) {
                if mask >> w & 1 == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let last = (0..n).find(|&v| reach[full - 1] >> v & 1 == 1 && g.has_edge(v, 0))?;
    let mut order = vec![last];
    let mut mask = full - 1;
    let mut v = last;
    while v != 0 {
        mask &= !(1 << v);
        v = g.neighbors(v).iter().find(|&u| reach[mask] >> u & 1 == 1).unwrap();
        order.push(v);
    }
    order.reverse();
    Some(HamiltonCycle { order })
}
