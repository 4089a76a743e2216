//! Canonical labelling and automorphism groups by partition refinement and
//! individualisation, with automorphism pruning.

use std::collections::VecDeque;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex, VertexSet};

/// A vertex permutation, `perm[v]` is the image of `v`.
pub type Perm = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    pub order: BigUint,
    pub generators: Vec<Perm>,
    /// Two graphs are isomorphic iff these bytes are equal.
    pub canonical_form: Vec<u8>,
    /// `labeling[v]` is the position of `v` in the canonical ordering.
    pub labeling: Perm,
}

#[derive(Clone)]
struct Partition {
    lab: Vec<Vertex>,
    /// Length of the cell starting at a position, zero elsewhere.
    len: Vec<usize>,
    /// Start position of the cell holding a vertex.
    cell_of: Vec<usize>,
}

impl Partition {
    fn from_colors(colors: &[u32]) -> (Self, Vec<usize>) {
        let n = colors.len();
        let mut lab: Vec<Vertex> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut len = vec![0; n];
        let mut cell_of = vec![0; n];
        let mut starts = Vec::new();
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j < n && colors[lab[j]] == colors[lab[i]] {
                cell_of[lab[j]] = i;
                j += 1;
            }
            len[i] = j - i;
            starts.push(i);
            i = j;
        }
        (Partition { lab, len, cell_of }, starts)
    }

    fn first_nontrivial(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.lab.len() {
            if self.len[s] > 1 {
                return Some(s);
            }
            s += self.len[s];
        }
        None
    }

    fn cell(&self, s: usize) -> &[Vertex] {
        &self.lab[s..s + self.len[s]]
    }

    fn refine(&mut self, g: &Graph, init: &[usize]) {
        let n = self.lab.len();
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in init {
            in_queue[s] = true;
            queue.push_back(s);
        }
        let mut keyed: Vec<(usize, Vertex)> = Vec::with_capacity(n);
        while let Some(ws) = queue.pop_front() {
            in_queue[ws] = false;
            let w: VertexSet = self.cell(ws).iter().copied().collect();
            let mut s = 0;
            while s < n {
                let l = self.len[s];
                if l > 1 {
                    keyed.clear();
                    keyed.extend(self.lab[s..s + l].iter().map(|&v| ((g.neighbors(v) & w).len(), v)));
                    let first = keyed[0].0;
                    if keyed.iter().any(|&(c, _)| c != first) {
                        keyed.sort_by_key(|&(c, _)| c);
                        let mut frags = Vec::new();
                        let mut i = 0;
                        while i < l {
                            let mut j = i;
                            while j < l && keyed[j].0 == keyed[i].0 {
                                j += 1;
                            }
                            frags.push((s + i, j - i));
                            i = j;
                        }
                        for (k, &(_, v)) in keyed.iter().enumerate() {
                            self.lab[s + k] = v;
                        }
                        for &(fs, fl) in &frags {
                            self.len[fs] = fl;
                            for &v in &self.lab[fs..fs + fl] {
                                self.cell_of[v] = fs;
                            }
                        }
                        let largest = frags
                            .iter()
                            .enumerate()
                            .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                            .map(|(i, _)| i)
                            .unwrap();
                        let was_queued = in_queue[s];
                        for (i, &(fs, _)) in frags.iter().enumerate() {
                            if in_queue[fs] || (!was_queued && i == largest) {
                                continue;
                            }
                            in_queue[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
                s += l;
            }
        }
    }

    fn individualize(&self, g: &Graph, v: Vertex) -> Partition {
        let mut p = self.clone();
        let s = p.cell_of[v];
        let l = p.len[s];
        let pos = s + p.lab[s..s + l].iter().position(|&x| x == v).unwrap();
        p.lab.swap(s, pos);
        p.len[s] = 1;
        p.len[s + 1] = l - 1;
        for &x in &p.lab[s + 1..s + l] {
            p.cell_of[x] = s + 1;
        }
        p.refine(g, &[s]);
        p
    }
}

struct Search<'a> {
    g: &'a Graph,
    first_path: Vec<Vertex>,
    first_lab: Vec<Vertex>,
    first_cert: Vec<u64>,
    best_path: Vec<Vertex>,
    best_lab: Vec<Vertex>,
    best_cert: Vec<u64>,
    generators: Vec<Perm>,
    path: Vec<Vertex>,
}

fn certificate(g: &Graph, lab: &[Vertex]) -> Vec<u64> {
    let n = lab.len();
    let mut pos = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter().map(|&v| g.neighbors(v).map(&pos).bits()).collect()
}

fn common_prefix(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Orbits of the group generated by `gens`: `roots[v]` is the smallest vertex in the orbit of `v`.
pub fn orbit_roots(n: usize, gens: &[&Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g[v]));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

fn fixes(perm: &Perm, pts: &[Vertex]) -> bool {
    pts.iter().all(|&v| perm[v] == v)
}

impl<'a> Search<'a> {
    /// Returns the level to unwind to, if any.
    fn run(&mut self, part: Partition) -> Option<usize> {
        let level = self.path.len();
        let Some(s) = part.first_nontrivial() else {
            return self.leaf(&part.lab);
        };
        let mut cell: Vec<Vertex> = part.cell(s).to_vec();
        cell.sort_unstable();
        let mut tried: Vec<Vertex> = Vec::new();
        for v in cell {
            if !tried.is_empty() {
                let stab: Vec<&Perm> = self.generators.iter().filter(|p| fixes(p, &self.path)).collect();
                let roots = orbit_roots(self.g.order(), &stab);
                if tried.iter().any(|&t| roots[t] == roots[v]) {
                    continue;
                }
            }
            tried.push(v);
            let child = part.individualize(self.g, v);
            self.path.push(v);
            let jump = self.run(child);
            self.path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: &[Vertex]) -> Option<usize> {
        let cert = certificate(self.g, lab);
        if self.first_lab.is_empty() && self.g.order() > 0 {
            self.first_path = self.path.clone();
            self.first_lab = lab.to_vec();
            self.best_path = self.path.clone();
            self.best_lab = lab.to_vec();
            self.first_cert = cert.clone();
            self.best_cert = cert;
            return None;
        }
        if cert == self.first_cert {
            self.record(&self.first_lab.clone(), lab);
            return Some(common_prefix(&self.path, &self.first_path));
        }
        if cert == self.best_cert {
            self.record(&self.best_lab.clone(), lab);
            return Some(common_prefix(&self.path, &self.best_path));
        }
        if cert > self.best_cert {
            self.best_cert = cert;
            self.best_lab = lab.to_vec();
            self.best_path = self.path.clone();
        }
        None
    }

    fn record(&mut self, from: &[Vertex], to: &[Vertex]) {
        let mut perm = vec![0; from.len()];
        for (i, &v) in from.iter().enumerate() {
            perm[v] = to[i];
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) && !self.generators.contains(&perm) {
            self.generators.push(perm);
        }
    }
}

/// Automorphism group of a vertex-coloured graph; automorphisms preserve colours
/// and the canonical form distinguishes colour classes by their sizes in colour order.
pub fn automorphism_group_colored(g: &Graph, colors: &[u32]) -> AutGroup {
    let n = g.order();
    assert_eq!(colors.len(), n, "one colour per vertex");
    let (mut root, starts) = Partition::from_colors(colors);
    root.refine(g, &starts);
    let mut search = Search {
        g,
        first_path: Vec::new(),
        first_lab: Vec::new(),
        first_cert: Vec::new(),
        best_path: Vec::new(),
        best_lab: Vec::new(),
        best_cert: Vec::new(),
        generators: Vec::new(),
        path: Vec::new(),
    };
    if n == 0 {
        return AutGroup {
            order: BigUint::from(1u32),
            generators: Vec::new(),
            canonical_form: crate::io::to_graph6_bytes(g),
            labeling: Vec::new(),
        };
    }
    search.run(root);

    let mut order = BigUint::from(1u32);
    for l in 0..search.first_path.len() {
        let prefix = &search.first_path[..l];
        let stab: Vec<&Perm> = search.generators.iter().filter(|p| fixes(p, prefix)).collect();
        let roots = orbit_roots(n, &stab);
        let target = roots[search.first_path[l]];
        order *= roots.iter().filter(|&&r| r == target).count() as u32;
    }

    let mut labeling = vec![0; n];
    for (i, &v) in search.best_lab.iter().enumerate() {
        labeling[v] = i;
    }
    let canon = g.permuted(&labeling).without_labels();
    let mut canonical_form = crate::io::to_graph6_bytes(&canon);
    let mut sizes: Vec<u32> = colors.to_vec();
    if sizes.iter().any(|&c| c != sizes[0]) {
        sizes.sort_unstable();
        canonical_form.push(b'|');
        let mut i = 0;
        while i < n {
            let j = (i..n).find(|&j| sizes[j] != sizes[i]).unwrap_or(n);
            canonical_form.extend(format!("{},", j - i).bytes());
            i = j;
        }
    }
    AutGroup { order, generators: search.generators, canonical_form, labeling }
}

pub fn automorphism_group(g: &Graph) -> AutGroup {
    automorphism_group_colored(g, &vec![0; g.order()])
}

pub fn canonical_form(g: &Graph) -> Vec<u8> {
    automorphism_group(g).canonical_form
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// An isomorphism `perm` with `g.permuted(perm) == h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Perm> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let a = automorphism_group(g);
    let b = automorphism_group(h);
    if a.canonical_form != b.canonical_form {
        return None;
    }
    let n = g.order();
    let mut inv_b = vec![0; n];
    for v in 0..n {
        inv_b[b.labeling[v]] = v;
    }
    Some((0..n).map(|v| inv_b[a.labeling[v]]).collect())
}

/// Pointwise stabiliser of `fixed` (in order): each fixed vertex gets its own colour.
pub fn pointwise_stabilizer(g: &Graph, fixed: &[Vertex]) -> AutGroup {
    let mut colors = vec![0u32; g.order()];
    for (i, &v) in fixed.iter().enumerate() {
        colors[v] = i as u32 + 1;
    }
    automorphism_group_colored(g, &colors)
}

pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    let n = g.order();
    if perm.len() != n {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &p in perm {
        if p >= n || seen.contains(p) {
            return false;
        }
        seen.insert(p);
    }
    (0..n).all(|v| g.neighbors(v).map(perm) == g.neighbors(perm[v]))
}

/// All elements of the group generated by `gens`, by closure. Only for small groups.
pub fn group_elements(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let next: Perm = out[i].iter().map(|&x| g[x]).collect();
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}
