//! Hamiltonicity of the named graphs, with bipartite parity explaining the negatives.

use minorsmith::catalog::builtin;
use minorsmith::minor::{hamilton_held_karp, is_hamiltonian};
use minorsmith::structure::bipartition;

fn main() {
    for name in ["K34", "Qplus", "Herschel", "D17", "LineK33", "F4", "E20"] {
        let g = builtin(name).unwrap().graph;
        let cycle = is_hamiltonian(&g);
        assert_eq!(cycle.is_some(), hamilton_held_karp(&g).is_some());
        match (cycle, bipartition(&g)) {
            (Some(c), _) => {
                let names: Vec<String> = c.order.iter().map(|&v| g.display_vertex(v)).collect();
                println!("{name}: {}", names.join(" "));
            }
            (None, Some((a, b))) => println!("{name}: non-hamiltonian, bipartite {} + {}", a.len(), b.len()),
            (None, None) => println!("{name}: non-hamiltonian"),
        }
    }
}
