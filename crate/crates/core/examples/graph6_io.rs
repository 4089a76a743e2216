//! graph6 and edge-list round trips, including a label sidecar.

use minorsmith::catalog::builtin;
use minorsmith::io::{from_graph6, label_map_json, parse_edge_list, to_edge_list, to_graph6};

fn main() {
    let f4 = builtin("F4").unwrap().graph;
    let g6 = to_graph6(&f4);
    println!("F4 graph6: {g6}");
    let back = from_graph6(&g6).unwrap();
    assert_eq!(to_graph6(&back), g6);

    let el = to_edge_list(&f4);
    println!("edge list:\n{el}");
    assert_eq!(to_graph6(&parse_edge_list(&el).unwrap()), g6);
    println!("labels sidecar:\n{}", label_map_json(&f4).unwrap());
}
