//! Minor testing by contraction search.
//!
//! A connected branch set can absorb any unused vertex adjacent to it, so a
//! pattern on `k` vertices is a minor of `G` exactly when some sequence of edge
//! contractions and whole-component deletions reaches a graph on `k` vertices
//! that contains the pattern as a spanning subgraph. States are memoised by
//! canonical form.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::graph::{merge_vertices, Graph, VertexSet};

use super::embed::spanning_embedding;
use super::MinorCertificate;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub states: usize,
    pub memo_hits: usize,
}

struct Ctx<'a> {
    pattern: &'a Graph,
    k: usize,
    m: usize,
    seen: HashSet<Vec<u8>>,
    stats: SearchStats,
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorCertificate> {
    minor_search_stats(host, pattern).0
}

pub fn minor_search_stats(host: &Graph, pattern: &Graph) -> (Option<MinorCertificate>, SearchStats) {
    let k = pattern.order();
    let mut ctx = Ctx { pattern, k, m: pattern.size(), seen: HashSet::new(), stats: SearchStats::default() };
    if k == 0 {
        return (Some(MinorCertificate { branch_sets: Vec::new(), connecting_edges: Vec::new() }), ctx.stats);
    }
    if host.order() < k || host.size() < pattern.size() {
        return (None, ctx.stats);
    }
    let host = host.clone().without_labels();
    let groups: Vec<VertexSet> = (0..host.order()).map(VertexSet::singleton).collect();
    let found = ctx.search(&host, &groups);
    (found.map(|sets| certificate(&host, pattern, &sets)), ctx.stats)
}

impl Ctx<'_> {
    fn search(&mut self, h: &Graph, groups: &[VertexSet]) -> Option<Vec<VertexSet>> {
        self.stats.states += 1;
        let n = h.order();
        if n < self.k {
            return None;
        }
        let comps = h.components();
        if h.size() + comps.len() < self.m + (n - self.k) + 1 {
            return None;
        }
        if !self.seen.insert(canonical_form(h)) {
            self.stats.memo_hits += 1;
            return None;
        }
        if n == self.k {
            let phi = spanning_embedding(self.pattern, h)?;
            return Some(phi.iter().map(|&x| groups[x]).collect());
        }
        for (u, v) in h.edges() {
            let child = merge_vertices(h, u, v);
            let mut g2 = groups.to_vec();
            g2[u] |= groups[v];
            g2.remove(v);
            if let Some(found) = self.search(&child, &g2) {
                return Some(found);
            }
        }
        if comps.len() > 1 {
            for c in comps {
                if n - c.len() < self.k {
                    continue;
                }
                let keep = h.vertices() - c;
                let g2: Vec<VertexSet> = keep.iter().map(|v| groups[v]).collect();
                if let Some(found) = self.search(&h.induced(keep), &g2) {
                    return Some(found);
                }
            }
        }
        None
    }
}

fn certificate(host: &Graph, pattern: &Graph, sets: &[VertexSet]) -> MinorCertificate {
    let connecting_edges = pattern
        .edges()
        .map(|(a, b)| {
            let x = sets[a].iter().find(|&x| host.neighbors(x).intersects(sets[b])).expect("branch sets touch");
            let y = (host.neighbors(x) & sets[b]).first().unwrap();
            ((a, b), (x, y))
        })
        .collect();
    MinorCertificate { branch_sets: sets.iter().map(|s| s.to_vec()).collect(), connecting_edges }
}
