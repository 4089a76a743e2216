//! Minor, topological-minor and Hamiltonicity search, each returning a witness
//! that [`verify_certificate`] checks independently.

mod contract;
mod embed;
mod hamilton;
pub mod oracle;
pub(crate) mod topo;
mod verify;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Vertex};

pub use contract::{has_minor, minor_search_stats, SearchStats};
pub use embed::spanning_embedding;
pub use hamilton::{hamilton_held_karp, is_hamiltonian};
pub use topo::{has_topological_minor, induced_paths};
pub use verify::{verify_certificate, verify_hamilton_cycle, verify_minor, verify_subdivision};

/// Version of the JSON layout of witnesses and reports.
pub const SCHEMA_VERSION: u32 = 1;

/// Branch sets indexed by pattern vertex, plus one host edge per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub branch_sets: Vec<Vec<Vertex>>,
    /// `(pattern edge, host edge)`, pattern edges in lexicographic order.
    pub connecting_edges: Vec<(Edge, Edge)>,
}

/// Branch vertices indexed by pattern vertex; one host path per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionMap {
    pub branch_vertices: Vec<Vertex>,
    /// `(pattern edge (u, v), path from η(u) to η(v))`.
    pub segments: Vec<(Edge, Vec<Vertex>)>,
}

impl SubdivisionMap {
    pub fn segment(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        self.segments.iter().find_map(|((a, b), path)| {
            if (*a, *b) == (u, v) {
                Some(path.clone())
            } else if (*a, *b) == (v, u) {
                Some(path.iter().rev().copied().collect())
            } else {
                None
            }
        })
    }

    /// Every host vertex on the image.
    pub fn image(&self) -> crate::graph::VertexSet {
        let mut s: crate::graph::VertexSet = self.branch_vertices.iter().copied().collect();
        for (_, p) in &self.segments {
            s |= p.iter().copied().collect();
        }
        s
    }

    /// The identity map of a graph onto itself.
    pub fn identity(g: &crate::graph::Graph) -> Self {
        SubdivisionMap {
            branch_vertices: (0..g.order()).collect(),
            segments: g.edges().map(|(u, v)| ((u, v), vec![u, v])).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonCycle {
    pub order: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Minor(MinorCertificate),
    Subdivision(SubdivisionMap),
    HamiltonCycle(HamiltonCycle),
}
