//! Subdivision search: a wheel subdivided twice still contains a K4 subdivision.

use minorsmith::catalog::wheel;
use minorsmith::minor::{has_topological_minor, verify_subdivision};
use minorsmith::{Edit, Graph};

fn main() {
    let w = wheel(5).unwrap().graph.without_labels();
    let host = w
        .apply(&Edit::SubdivideEdge { u: 0, v: 1 })
        .and_then(|g| g.apply(&Edit::SubdivideEdge { u: 2, v: 3 }))
        .unwrap();
    let k4 = Graph::complete(4).unwrap();
    let map = has_topological_minor(&host, &k4).expect("wheels contain K4 subdivisions");
    println!("branch vertices {:?}", map.branch_vertices);
    for ((a, b), path) in &map.segments {
        println!("  {a}-{b}: {path:?}");
    }
    println!("verified: {}", verify_subdivision(&host, &k4, &map));

    let k5 = Graph::complete(5).unwrap();
    println!("K5 subdivision in the wheel: {}", has_topological_minor(&host, &k5).is_some());
}
