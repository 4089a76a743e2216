pub mod graph;
pub mod io;

pub use graph::{Edit, Graph, GraphError, SplitSpec, Vertex, VertexSet};
pub mod structure;
pub mod connectivity;
pub mod canon;
pub mod minor;
pub mod catalog;
pub mod report;
pub mod splitter;
pub mod orbits;
pub mod subdivision;
pub mod lemmas;
pub mod sweep;
pub mod cli;

#[cfg(test)]
mod test_support;
