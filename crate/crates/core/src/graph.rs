//! Small simple undirected graphs with one `u64` adjacency row per vertex.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard vertex capacity: every adjacency row is a single machine word.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edit precondition violated: {0}")]
    EditPreconditionViolated(String),
    #[error("vertex {vertex} has degree {degree}; splitting needs degree at least 4")]
    SplitDegreeTooLow { vertex: Vertex, degree: usize },
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
    #[error("graph has {0} edges; the line graph supports at most {MAX_VERTICES}")]
    TooManyEdges(usize),
}

/// A set of vertices of a graph on at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Image under a vertex permutation given as `perm[v] = image of v`.
    pub fn map(self, perm: &[Vertex]) -> VertexSet {
        self.iter().map(|v| perm[v]).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}
set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// An undirected edge stored with `0 <= lo < hi`.
pub type Edge = (Vertex, Vertex);

pub fn normalize_edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Labels are carried along for display and catalog lookups; equality and
/// hashing only look at the adjacency structure.
#[derive(Clone)]
pub struct Graph {
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { rows: vec![VertexSet::EMPTY; n], labels: None })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from symmetric, loop-free adjacency rows.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let g = Graph { rows, labels: None };
        g.validate()?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.rows[v] = all - VertexSet::singleton(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Parts are `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Re-checks the structural invariants: symmetric, loop-free, in range.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.order();
        let all = VertexSet::full(n);
        for (u, &row) in self.rows.iter().enumerate() {
            if let Some(v) = (row - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in row {
                if !self.rows[v].contains(u) {
                    return Err(GraphError::EditPreconditionViolated(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.rows[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| (row - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    /// Neighbours of a vertex set that lie outside it.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out |= self.rows[v];
        }
        out - set
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.rows[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(VertexSet::singleton(v), rest);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach(VertexSet::singleton(v), within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.rows[v].intersects(set))
    }

    pub fn induced_edge_count(&self, set: VertexSet) -> usize {
        set.iter().map(|v| (self.rows[v] & set).len()).sum::<usize>() / 2
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let n = self.order();
        let mut rows = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            rows[perm[v]] = self.rows[v].map(perm);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for v in 0..n {
                out[perm[v]] = l[v].clone();
            }
            out
        });
        Graph { rows, labels }
    }

    /// Subgraph induced by `keep`, renumbered densely in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order: Vec<Vertex> = keep.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| (self.rows[v] & keep).iter().map(|u| index[u]).collect())
            .collect();
        let labels = self.labels.as_ref().map(|l| order.iter().map(|&v| l[v].clone()).collect());
        Graph { rows, labels }
    }

    /// Disjoint union followed by extra edges; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.order();
        let n = shift + other.order();
        let mut edges: Vec<Edge> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(n, &edges)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::EditPreconditionViolated(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Vertex carrying the given label, if any.
    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Human-readable name for a vertex: its label or its index.
    pub fn display_vertex(&self, v: Vertex) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n + 1));
        }
        if let Some(v) = (neighbors - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        let mut rows = self.rows.clone();
        for v in neighbors {
            rows[v].insert(n);
        }
        rows.push(neighbors);
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(format!("x{n}"));
            l
        });
        Ok(Graph { rows, labels })
    }

    pub fn apply(&self, edit: &Edit) -> Result<Graph, GraphError> {
        apply_edit(self, edit)
    }

    pub fn split(&self, spec: &SplitSpec) -> Result<Graph, GraphError> {
        split_vertex(self, spec)
    }
}

/// One elementary graph edit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Edit {
    AddEdge { u: Vertex, v: Vertex },
    DeleteEdge { u: Vertex, v: Vertex },
    DeleteVertex { v: Vertex },
    /// Merges `v` into `u`; the lower index survives.
    ContractEdge { u: Vertex, v: Vertex },
    /// Appends a new vertex of degree 2 on the edge.
    SubdivideEdge { u: Vertex, v: Vertex },
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Edit::AddEdge { u, v } => write!(f, "add edge {u}-{v}"),
            Edit::DeleteEdge { u, v } => write!(f, "delete edge {u}-{v}"),
            Edit::DeleteVertex { v } => write!(f, "delete vertex {v}"),
            Edit::ContractEdge { u, v } => write!(f, "contract edge {u}-{v}"),
            Edit::SubdivideEdge { u, v } => write!(f, "subdivide edge {u}-{v}"),
        }
    }
}

/// Removes bit `v` from a row and shifts the higher bits down by one.
fn drop_bit(row: VertexSet, v: Vertex) -> VertexSet {
    let bits = row.bits();
    let low = bits & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { (bits >> (v + 1)) << v };
    VertexSet::from_bits(low | high)
}

fn delete_vertex(g: &Graph, v: Vertex) -> Graph {
    let mut rows = g.rows.clone();
    rows.remove(v);
    for r in rows.iter_mut() {
        *r = drop_bit(*r, v);
    }
    let labels = g.labels.as_ref().map(|l| {
        let mut l = l.clone();
        l.remove(v);
        l
    });
    Graph { rows, labels }
}

/// Contracts the edge `uv` (or merges two non-adjacent vertices when
/// `require_edge` is false). The lower index survives.
pub(crate) fn merge_vertices(g: &Graph, u: Vertex, v: Vertex) -> Graph {
    let (keep, gone) = normalize_edge(u, v);
    let mut rows = g.rows.clone();
    let merged = (rows[keep] | rows[gone]) - VertexSet::singleton(keep) - VertexSet::singleton(gone);
    for w in merged {
        rows[w].insert(keep);
    }
    rows[keep] = merged;
    let mut out = Graph { rows, labels: g.labels.clone() };
    out = delete_vertex(&out, gone);
    out
}

/// Applies one edit, checking its preconditions against `g`.
pub fn apply_edit(g: &Graph, edit: &Edit) -> Result<Graph, GraphError> {
    let need_edge = |u: Vertex, v: Vertex| -> Result<(), GraphError> {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(GraphError::EditPreconditionViolated(format!("{u}-{v} is not an edge")));
        }
        Ok(())
    };
    match *edit {
        Edit::AddEdge { u, v } => {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::EditPreconditionViolated(format!("{u}-{v} is already an edge")));
            }
            let mut out = g.clone();
            out.rows[u].insert(v);
            out.rows[v].insert(u);
            Ok(out)
        }
        Edit::DeleteEdge { u, v } => {
            need_edge(u, v)?;
            let mut out = g.clone();
            out.rows[u].remove(v);
            out.rows[v].remove(u);
            Ok(out)
        }
        Edit::DeleteVertex { v } => {
            g.check_vertex(v)?;
            Ok(delete_vertex(g, v))
        }
        Edit::ContractEdge { u, v } => {
            need_edge(u, v)?;
            Ok(merge_vertices(g, u, v))
        }
        Edit::SubdivideEdge { u, v } => {
            need_edge(u, v)?;
            let n = g.order();
            if n + 1 > MAX_VERTICES {
                return Err(GraphError::TooManyVertices(n + 1));
            }
            let mut rows = g.rows.clone();
            rows[u].remove(v);
            rows[v].remove(u);
            rows[u].insert(n);
            rows[v].insert(n);
            rows.push(VertexSet::singleton(u) | VertexSet::singleton(v));
            let labels = g.labels.as_ref().map(|l| {
                let mut l = l.clone();
                l.push(format!("s({},{})", l[u], l[v]));
                l
            });
            Ok(Graph { rows, labels })
        }
    }
}

/// Vertex split: `vertex` keeps its index and the neighbours in `keep`; a new
/// vertex (index `n`) takes the neighbours in `moved`; the two are joined.
///
/// The pair is unordered. [`SplitSpec::new`] normalises it so that `keep`
/// contains the smallest neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitSpec {
    pub vertex: Vertex,
    pub keep: VertexSet,
    pub moved: VertexSet,
}

impl SplitSpec {
    pub fn new(vertex: Vertex, a: VertexSet, b: VertexSet) -> Self {
        let (keep, moved) = if a.first() <= b.first() && !a.is_empty() || b.is_empty() {
            (a, b)
        } else {
            (b, a)
        };
        SplitSpec { vertex, keep, moved }
    }

    /// All valid splits of `v` (each side at least two neighbours).
    pub fn all_for_vertex(g: &Graph, v: Vertex) -> Vec<SplitSpec> {
        let nbrs = g.neighbors(v).to_vec();
        let d = nbrs.len();
        if d < 4 {
            return Vec::new();
        }
        let mut out = Vec::new();
        // The first neighbour always stays with `v`, so each unordered pair appears once.
        for mask in 0u64..(1u64 << (d - 1)) {
            let mut keep = VertexSet::singleton(nbrs[0]);
            let mut moved = VertexSet::EMPTY;
            for (i, &w) in nbrs.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    moved.insert(w);
                } else {
                    keep.insert(w);
                }
            }
            if keep.len() >= 2 && moved.len() >= 2 {
                out.push(SplitSpec { vertex: v, keep, moved });
            }
        }
        out.sort();
        out
    }

    pub fn all(g: &Graph) -> Vec<SplitSpec> {
        (0..g.order()).flat_map(|v| SplitSpec::all_for_vertex(g, v)).collect()
    }

    pub fn map(&self, perm: &[Vertex]) -> SplitSpec {
        SplitSpec::new(perm[self.vertex], self.keep.map(perm), self.moved.map(perm))
    }

    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        g.check_vertex(self.vertex)?;
        let d = g.degree(self.vertex);
        if d < 4 {
            return Err(GraphError::SplitDegreeTooLow { vertex: self.vertex, degree: d });
        }
        let nbrs = g.neighbors(self.vertex);
        if self.keep.intersects(self.moved) {
            return Err(GraphError::InvalidPartition("the two sides overlap".into()));
        }
        if self.keep | self.moved != nbrs {
            return Err(GraphError::InvalidPartition(format!(
                "sides {:?} and {:?} do not cover the neighbourhood {:?}",
                self.keep, self.moved, nbrs
            )));
        }
        if self.keep.len() < 2 || self.moved.len() < 2 {
            return Err(GraphError::InvalidPartition(format!(
                "each side needs at least two neighbours, got {} and {}",
                self.keep.len(),
                self.moved.len()
            )));
        }
        Ok(())
    }
}

pub fn split_vertex(g: &Graph, spec: &SplitSpec) -> Result<Graph, GraphError> {
    spec.check(g)?;
    let n = g.order();
    if n + 1 > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n + 1));
    }
    let v = spec.vertex;
    let mut rows = g.rows.clone();
    for w in spec.moved {
        rows[w].remove(v);
        rows[w].insert(n);
    }
    rows[v] = spec.keep | VertexSet::singleton(n);
    rows[v].remove(v);
    rows.push(spec.moved | VertexSet::singleton(v));
    let labels = g.labels.as_ref().map(|l| {
        let mut l = l.clone();
        l.push(format!("{}'", l[v]));
        l
    });
    Ok(Graph { rows, labels })
}

/// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() > MAX_VERTICES {
        return Err(GraphError::TooManyEdges(edges.len()));
    }
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    let lg = Graph::from_edges(edges.len(), &out)?;
    if let Some(labels) = g.labels() {
        let names = edges.iter().map(|&(u, v)| format!("{}{}", labels[u], labels[v])).collect();
        return lg.with_labels(names);
    }
    Ok(lg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4).unwrap()
    }

    #[test]
    fn contracting_a_four_cycle_gives_a_triangle() {
        let c4 = Graph::cycle(4).unwrap();
        let t = c4.apply(&Edit::ContractEdge { u: 0, v: 1 }).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.size(), 3);
        assert_eq!(t, Graph::complete(3).unwrap());
    }

    #[test]
    fn subdividing_k4() {
        let g = k4().apply(&Edit::SubdivideEdge { u: 1, v: 2 }).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 7);
        assert_eq!(g.degree(4), 2);
        let mut degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 3, 3, 2]);
    }

    #[test]
    fn adding_an_existing_edge_is_rejected() {
        let err = k4().apply(&Edit::AddEdge { u: 1, v: 2 }).unwrap_err();
        assert!(matches!(err, GraphError::EditPreconditionViolated(_)));
    }

    #[test]
    fn deleting_a_vertex_renumbers_densely() {
        let p = Graph::path(4).unwrap();
        let g = p.apply(&Edit::DeleteVertex { v: 1 }).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn contraction_keeps_lower_index() {
        // star centred at 3 with leaves 0,1,2 plus edge 0-4
        let g = Graph::from_edges(5, &[(3, 0), (3, 1), (3, 2), (0, 4)]).unwrap();
        let h = g.apply(&Edit::ContractEdge { u: 3, v: 0 }).unwrap();
        // vertex 0 now carries the star; 4 shifted to 3
        assert_eq!(h.neighbors(0).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn cubic_graphs_cannot_be_split() {
        let spec = SplitSpec::new(0, VertexSet::from_iter([1, 2]), VertexSet::from_iter([3]));
        let err = k4().split(&spec).unwrap_err();
        assert!(matches!(err, GraphError::SplitDegreeTooLow { vertex: 0, degree: 3 }));
        assert!(SplitSpec::all(&k4()).is_empty());
    }

    #[test]
    fn split_needs_two_neighbours_per_side() {
        let k5 = Graph::complete(5).unwrap();
        let spec = SplitSpec::new(0, VertexSet::from_iter([1, 2, 3]), VertexSet::from_iter([4]));
        assert!(matches!(k5.split(&spec), Err(GraphError::InvalidPartition(_))));
        assert_eq!(SplitSpec::all_for_vertex(&k5, 0).len(), 3);
    }

    #[test]
    fn split_then_contract_is_identity() {
        let k5 = Graph::complete(5).unwrap();
        for spec in SplitSpec::all(&k5) {
            let s = k5.split(&spec).unwrap();
            assert_eq!(s.size(), k5.size() + 1);
            let back = s.apply(&Edit::ContractEdge { u: spec.vertex, v: 5 }).unwrap();
            assert_eq!(back, k5);
        }
    }

    #[test]
    fn line_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let l = line_graph(&c5).unwrap();
        assert_eq!((l.order(), l.size()), (5, 5));
        assert!((0..5).all(|v| l.degree(v) == 2) && l.is_connected());

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let l = line_graph(&k33).unwrap();
        assert_eq!((l.order(), l.size()), (9, 18));
        assert!((0..9).all(|v| l.degree(v) == 4));

        // octahedron: every vertex misses exactly one other
        let l = line_graph(&k4()).unwrap();
        assert_eq!((l.order(), l.size()), (6, 12));
        let mut partners = Vec::new();
        for v in 0..6 {
            let missing = VertexSet::full(6) - l.neighbors(v) - VertexSet::singleton(v);
            assert_eq!(missing.len(), 1);
            partners.push(missing.first().unwrap());
        }
        assert!((0..6).all(|v| partners[partners[v]] == v));
    }

    #[test]
    fn too_many_edges_for_line_graph() {
        let k12 = Graph::complete(12).unwrap();
        assert_eq!(line_graph(&k12).unwrap_err(), GraphError::TooManyEdges(66));
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 5, 63].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 5, 63]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(drop_bit(s, 5).to_vec(), vec![0, 62]);
        assert_eq!(drop_bit(s, 63).to_vec(), vec![0, 5]);
    }
}
