//! Automorphism groups and canonical forms.

use minorsmith::canon::{are_isomorphic, automorphism_group};
use minorsmith::catalog::builtin;

fn main() {
    for name in ["D17", "E20", "E22", "F4", "V8", "Cube", "Herschel"] {
        let g = builtin(name).unwrap().graph;
        let aut = automorphism_group(&g);
        println!(
            "{name:>8}: order {:>4}, {} generators, canonical {}",
            aut.order,
            aut.generators.len(),
            String::from_utf8_lossy(&aut.canonical_form)
        );
    }
    let cube = builtin("Cube").unwrap().graph;
    let shuffled = cube.permuted(&[7, 6, 5, 4, 3, 2, 1, 0]);
    println!("relabelled cube isomorphic: {}", are_isomorphic(&cube, &shuffled));
}
