//! Vertex connectivity, small cuts and internal 4-connectivity.

use minorsmith::catalog::builtin;
use minorsmith::connectivity::{cuts_of_size, is_internally_4_connected, vertex_connectivity};

fn main() {
    for name in ["K33", "K34", "V8", "Cube", "E20", "F4", "Wheel(6)"] {
        let g = builtin(name).unwrap().graph;
        let k = vertex_connectivity(&g);
        let cuts = cuts_of_size(&g, 3);
        println!("{name:>8}: connectivity {k}, {} 3-cuts, internally 4-connected {}", cuts.len(), is_internally_4_connected(&g));
        if let Some(c) = cuts.first() {
            let names: Vec<String> = c.iter().map(|v| g.display_vertex(v)).collect();
            println!("          e.g. {{{}}}", names.join(", "));
        }
    }
}
