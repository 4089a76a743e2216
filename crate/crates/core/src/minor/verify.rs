//! Witness checking written against a plain adjacency matrix, independent of
//! the search code.

use crate::graph::{Graph, Vertex};

use super::{HamiltonCycle, MinorCertificate, SubdivisionMap, Witness};

struct Matrix {
    n: usize,
    adj: Vec<bool>,
}

impl Matrix {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for (u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Matrix { n, adj }
    }

    fn edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    fn connected(&self, set: &[Vertex]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut seen = vec![set[0]];
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &w in set {
                if !seen.contains(&w) && self.edge(u, w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }
}

pub fn verify_minor(host: &Graph, pattern: &Graph, cert: &MinorCertificate) -> bool {
    let m = Matrix::new(host);
    let p = Matrix::new(pattern);
    if cert.branch_sets.len() != p.n {
        return false;
    }
    let mut owner = vec![usize::MAX; m.n];
    for (i, set) in cert.branch_sets.iter().enumerate() {
        for &v in set {
            if v >= m.n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        if !m.connected(set) {
            return false;
        }
    }
    let mut covered = vec![false; p.n * p.n];
    for &((a, b), (x, y)) in &cert.connecting_edges {
        if !p.edge(a, b) || x >= m.n || y >= m.n || !m.edge(x, y) {
            return false;
        }
        if !((owner[x] == a && owner[y] == b) || (owner[x] == b && owner[y] == a)) {
            return false;
        }
        covered[a * p.n + b] = true;
        covered[b * p.n + a] = true;
    }
    (0..p.n).all(|a| (0..p.n).all(|b| !p.edge(a, b) || covered[a * p.n + b]))
}

pub fn verify_subdivision(host: &Graph, pattern: &Graph, map: &SubdivisionMap) -> bool {
    let m = Matrix::new(host);
    let p = Matrix::new(pattern);
    let eta = &map.branch_vertices;
    if eta.len() != p.n || eta.iter().any(|&v| v >= m.n) {
        return false;
    }
    let mut used = vec![false; m.n];
    for &v in eta {
        if used[v] {
            return false;
        }
        used[v] = true;
    }
    let mut covered = vec![false; p.n * p.n];
    for &((a, b), ref path) in &map.segments {
        if a >= p.n || b >= p.n || !p.edge(a, b) || covered[a * p.n + b] {
            return false;
        }
        covered[a * p.n + b] = true;
        covered[b * p.n + a] = true;
        if path.len() < 2 || path[0] != eta[a] || path[path.len() - 1] != eta[b] {
            return false;
        }
        if path.windows(2).any(|w| !m.edge(w[0], w[1])) {
            return false;
        }
        for &x in &path[1..path.len() - 1] {
            if x >= m.n || used[x] {
                return false;
            }
            used[x] = true;
        }
    }
    (0..p.n).all(|a| (0..p.n).all(|b| !p.edge(a, b) || covered[a * p.n + b]))
}

pub fn verify_hamilton_cycle(host: &Graph, cycle: &HamiltonCycle) -> bool {
    let m = Matrix::new(host);
    let c = &cycle.order;
    if m.n < 3 || c.len() != m.n {
        return false;
    }
    let mut seen = vec![false; m.n];
    for &v in c {
        if v >= m.n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..c.len()).all(|i| m.edge(c[i], c[(i + 1) % c.len()]))
}

/// Checks a witness against the host and, for minors and subdivisions, the pattern.
pub fn verify_certificate(host: &Graph, witness: &Witness, pattern: Option<&Graph>) -> bool {
    match (witness, pattern) {
        (Witness::Minor(c), Some(p)) => verify_minor(host, p, c),
        (Witness::Subdivision(s), Some(p)) => verify_subdivision(host, p, s),
        (Witness::HamiltonCycle(c), _) => verify_hamilton_cycle(host, c),
        _ => false,
    }
}
