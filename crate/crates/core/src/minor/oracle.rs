//! Slow exhaustive oracles used to cross-check the searchers.

use thiserror::Error;

use crate::graph::Graph;

pub const ORACLE_MAX_HOST: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("host has {0} vertices; the oracle handles at most {ORACLE_MAX_HOST}")]
    HostTooLarge(usize),
}

/// Tries every assignment of host vertices to `k` branch sets or "unused",
/// enumerated as restricted growth strings.
pub fn oracle_has_minor(host: &Graph, pattern: &Graph) -> Result<bool, OracleError> {
    let n = host.order();
    if n > ORACLE_MAX_HOST {
        return Err(OracleError::HostTooLarge(n));
    }
    let k = pattern.order();
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let hadj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| host.has_edge(u, v)).collect()).collect();
    let pedges: Vec<(usize, usize)> = pattern.edges().collect();
    let mut label = vec![0usize; n];
    Ok(assign(&hadj, &pedges, k, &mut label, 0, 0))
}

const UNUSED: usize = usize::MAX;

fn assign(h: &[Vec<bool>], pedges: &[(usize, usize)], k: usize, label: &mut [usize], i: usize, blocks: usize) -> bool {
    let n = label.len();
    if n - i < k - blocks {
        return false;
    }
    if i == n {
        return check(h, pedges, k, label);
    }
    label[i] = UNUSED;
    if assign(h, pedges, k, label, i + 1, blocks) {
        return true;
    }
    for b in 0..blocks.min(k) {
        label[i] = b;
        if assign(h, pedges, k, label, i + 1, blocks) {
            return true;
        }
    }
    if blocks < k {
        label[i] = blocks;
        if assign(h, pedges, k, label, i + 1, blocks + 1) {
            return true;
        }
    }
    false
}

fn check(h: &[Vec<bool>], pedges: &[(usize, usize)], k: usize, label: &[usize]) -> bool {
    let n = label.len();
    for b in 0..k {
        let members: Vec<usize> = (0..n).filter(|&v| label[v] == b).collect();
        let mut seen = vec![members[0]];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            for &w in &members {
                if h[u][w] && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        if seen.len() != members.len() {
            return false;
        }
    }
    let mut q = vec![vec![false; k]; k];
    for u in 0..n {
        for v in 0..n {
            if h[u][v] && label[u] != UNUSED && label[v] != UNUSED && label[u] != label[v] {
                q[label[u]][label[v]] = true;
            }
        }
    }
    let mut perm: Vec<usize> = (0..k).collect();
    permutations_any(&mut perm, 0, &mut |p| pedges.iter().all(|&(a, b)| q[p[a]][p[b]]))
}

fn permutations_any(perm: &mut [usize], i: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if i == perm.len() {
        return f(perm);
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        if permutations_any(perm, i + 1, f) {
            return true;
        }
        perm.swap(i, j);
    }
    false
}

/// Tries every cyclic order starting at vertex 0.
pub fn hamiltonian_brute_force(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    permutations_any(&mut rest, 0, &mut |p| {
        g.has_edge(0, p[0]) && g.has_edge(p[n - 2], 0) && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(oracle_has_minor(&Graph::complete(4).unwrap(), &k3), Ok(true));
        assert_eq!(oracle_has_minor(&Graph::cycle(6).unwrap(), &k3), Ok(true));
        assert_eq!(oracle_has_minor(&Graph::path(6).unwrap(), &k3), Ok(false));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(oracle_has_minor(&k33, &Graph::complete(4).unwrap()), Ok(true));
        assert_eq!(oracle_has_minor(&k33, &Graph::complete(5).unwrap()), Ok(false));
        assert_eq!(oracle_has_minor(&Graph::cycle(11).unwrap(), &k3), Err(OracleError::HostTooLarge(11)));
    }

    #[test]
    fn brute_force_hamiltonicity() {
        assert!(hamiltonian_brute_force(&Graph::cycle(7).unwrap()));
        assert!(!hamiltonian_brute_force(&Graph::complete_bipartite(3, 4).unwrap()));
        assert!(!hamiltonian_brute_force(&Graph::complete(2).unwrap()));
    }
}
