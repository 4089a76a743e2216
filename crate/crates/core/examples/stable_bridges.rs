//! Bridges of a subdivision and whether unstable fragments absorb them.

use minorsmith::catalog::builtin;
use minorsmith::minor::SubdivisionMap;
use minorsmith::subdivision::{classify_bridges, enumerate_unstable_fragments, find_stable_subdivision};

fn main() {
    let e20 = builtin("E20").unwrap();
    for anchor in [["e3_1", "e2", "e4"], ["e0", "e3_1", "e3_2"]] {
        let host = e20.graph.add_vertex(e20.vertices(&anchor)).unwrap();
        let eta = SubdivisionMap::identity(&e20.graph);
        println!("E20 + x on {{{}}}: {} unstable fragments", anchor.join(", "), enumerate_unstable_fragments(&host, &eta).len());
        for b in classify_bridges(&host, &eta) {
            println!("  bridge with attachments {:?}: {:?}", b.bridge.attachments.iter().collect::<Vec<_>>(), b.status);
        }
    }
    let host = e20.graph.add_vertex(e20.vertices(&["e0", "e3_1", "e3_2", "e4"])).unwrap();
    let found = find_stable_subdivision(&host, &e20.graph);
    println!("stable E20 subdivision in E20 + x on four branch vertices: {}", found.is_some());
}
