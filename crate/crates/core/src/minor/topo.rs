//! Topological-minor search.
//!
//! Branch vertices are placed in breadth-first pattern order; as soon as both
//! ends of a pattern edge are placed the edge is routed along an induced path
//! through unused host vertices. Any subdivision can be shortcut to one whose
//! segments are induced paths, so restricting to those loses nothing. Pattern
//! automorphisms are factored out by requiring `η(o_j) < η(o_i)` whenever `o_i`
//! lies in the orbit of `o_j` under the pointwise stabiliser of `o_1 .. o_{j-1}`.

use crate::canon::{orbit_roots, pointwise_stabilizer};
use crate::graph::{normalize_edge, Edge, Graph, Vertex, VertexSet};

use super::SubdivisionMap;

/// Every induced `s`–`t` path whose interior lies in `allowed`, shortest first
/// and then lexicographically.
pub fn induced_paths(g: &Graph, s: Vertex, t: Vertex, allowed: VertexSet) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut path = vec![s];
    walk(g, t, allowed - VertexSet::singleton(s) - VertexSet::singleton(t), &mut path, VertexSet::singleton(s), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn walk(g: &Graph, t: Vertex, allowed: VertexSet, path: &mut Vec<Vertex>, on: VertexSet, out: &mut Vec<Vec<Vertex>>) {
    let x = *path.last().unwrap();
    if g.has_edge(x, t) {
        let mut p = path.clone();
        p.push(t);
        out.push(p);
        return;
    }
    let behind = on - VertexSet::singleton(x);
    for y in g.neighbors(x) & allowed & !on {
        if g.neighbors(y).intersects(behind) {
            continue;
        }
        path.push(y);
        walk(g, t, allowed, path, on | VertexSet::singleton(y), out);
        path.pop();
    }
}

pub(crate) struct TopoSearch<'a, F: FnMut(&SubdivisionMap) -> bool> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<Vertex>,
    /// For each position `i`, earlier positions `j` with `η(o_j) < η(o_i)` required.
    below: Vec<Vec<usize>>,
    /// Earlier-placed pattern neighbours of each position, in placement order.
    back: Vec<Vec<Vertex>>,
    eta: Vec<Option<Vertex>>,
    used: VertexSet,
    segments: Vec<(Edge, Vec<Vertex>)>,
    visit: F,
}

fn placement_order(p: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(p.order());
    let mut seen = VertexSet::EMPTY;
    while order.len() < p.order() {
        let root = (p.vertices() - seen).iter().max_by(|&a, &b| p.degree(a).cmp(&p.degree(b)).then(b.cmp(&a))).unwrap();
        seen.insert(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in p.neighbors(v) - seen {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    order
}

impl<'a, F: FnMut(&SubdivisionMap) -> bool> TopoSearch<'a, F> {
    pub(crate) fn new(host: &'a Graph, pattern: &'a Graph, break_symmetry: bool, visit: F) -> Self {
        let order = placement_order(pattern);
        let k = order.len();
        let mut below = vec![Vec::new(); k];
        if break_symmetry {
            for j in 0..k {
                let stab = pointwise_stabilizer(pattern, &order[..j]);
                let gens: Vec<&Vec<Vertex>> = stab.generators.iter().collect();
                let roots = orbit_roots(pattern.order(), &gens);
                for i in j + 1..k {
                    if roots[order[i]] == roots[order[j]] {
                        below[i].push(j);
                    }
                }
            }
        }
        let mut pos = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<Vertex> = pattern.neighbors(v).iter().filter(|&w| pos[w] < i).collect();
                b.sort_by_key(|&w| pos[w]);
                b
            })
            .collect();
        TopoSearch {
            host,
            pattern,
            order,
            below,
            back,
            eta: vec![None; k],
            used: VertexSet::EMPTY,
            segments: Vec::new(),
            visit,
        }
    }

    /// Runs the search; returns true if the visitor asked to stop.
    pub(crate) fn run(&mut self) -> bool {
        let (h, p) = (self.host, self.pattern);
        if p.order() > h.order() || p.size() > h.size() {
            return false;
        }
        let mut hd: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
        let mut pd: Vec<usize> = (0..p.order()).map(|v| p.degree(v)).collect();
        hd.sort_unstable_by(|a, b| b.cmp(a));
        pd.sort_unstable_by(|a, b| b.cmp(a));
        if pd.iter().zip(&hd).any(|(a, b)| a > b) {
            return false;
        }
        self.place(0)
    }

    fn free(&self) -> VertexSet {
        self.host.vertices() - self.used
    }

    fn ports_ok(&self) -> bool {
        let free = self.free();
        self.order.iter().all(|&v| match self.eta[v] {
            None => true,
            Some(x) => {
                let open = self.pattern.neighbors(v).iter().filter(|&w| self.eta[w].is_none()).count();
                (self.host.neighbors(x) & free).len() >= open
            }
        })
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            let mut segments = self.segments.clone();
            segments.sort();
            let map = SubdivisionMap {
                branch_vertices: self.eta.iter().map(|x| x.unwrap()).collect(),
                segments,
            };
            return (self.visit)(&map);
        }
        let v = self.order[i];
        let floor = self.below[i].iter().map(|&j| self.eta[self.order[j]].unwrap() + 1).max().unwrap_or(0);
        let mut reach = self.free();
        for &q in &self.back[i] {
            reach.insert(self.eta[q].unwrap());
        }
        let need = self.pattern.degree(v);
        for x in self.free() {
            if x < floor || (self.host.neighbors(x) & reach).len() < need {
                continue;
            }
            self.eta[v] = Some(x);
            self.used.insert(x);
            if self.ports_ok() && self.route(i, 0) {
                return true;
            }
            self.used.remove(x);
            self.eta[v] = None;
        }
        false
    }

    fn route(&mut self, i: usize, j: usize) -> bool {
        let v = self.order[i];
        if j == self.back[i].len() {
            return self.place(i + 1);
        }
        let q = self.back[i][j];
        let (a, b) = (self.eta[v].unwrap(), self.eta[q].unwrap());
        for path in induced_paths(self.host, a, b, self.free()) {
            let interior: VertexSet = path[1..path.len() - 1].iter().copied().collect();
            self.used |= interior;
            let (e, oriented) = if v < q { ((v, q), path) } else { ((q, v), path.into_iter().rev().collect()) };
            debug_assert_eq!(e, normalize_edge(v, q));
            self.segments.push((e, oriented));
            if self.ports_ok() && self.route(i, j + 1) {
                return true;
            }
            self.segments.pop();
            self.used -= interior;
        }
        false
    }
}

/// A subdivision of `pattern` in `host`, if one exists.
pub fn has_topological_minor(host: &Graph, pattern: &Graph) -> Option<SubdivisionMap> {
    let mut found = None;
    TopoSearch::new(host, pattern, true, |m| {
        found = Some(m.clone());
        true
    })
    .run();
    found
}
