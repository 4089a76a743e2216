//! One-edge extensions and a shortest extension path between two graphs.

use minorsmith::catalog::{builtin, wheel};
use minorsmith::splitter::{enumerate_extensions, largest_wheel_minor, replay, splitter_reach};
use minorsmith::Graph;

fn main() {
    let f4 = builtin("F4").unwrap().graph;
    let ext = enumerate_extensions(&f4);
    println!("F4: {} edge additions, {} splits up to isomorphism", ext.edge_classes, ext.split_classes);

    let w4 = wheel(4).unwrap().graph;
    let target = Graph::complete(5).unwrap();
    let reach = splitter_reach(&w4, &target, 3);
    let path = reach.path.expect("W4 reaches K5");
    for step in &path {
        println!("  {} -> {}", step.kind, step.result_canonical);
    }
    println!("replayed: {}", minorsmith::io::to_graph6(&replay(&w4, &path).unwrap()));
    println!("states explored {}, start spokes {:?}", reach.states_explored, reach.start_wheel_spokes);
    println!("largest wheel minor of V8: {:?}", largest_wheel_minor(&builtin("V8").unwrap().graph, 7));
}
