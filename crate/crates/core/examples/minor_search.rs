//! Minor containment with a checked certificate.

use minorsmith::catalog::builtin;
use minorsmith::minor::{has_minor, minor_search_stats, verify_minor};

fn main() {
    for (host, pattern) in [("E22", "Qplus"), ("E20", "K34"), ("Herschel", "K23"), ("D17", "V8")] {
        let (h, p) = (builtin(host).unwrap().graph, builtin(pattern).unwrap().graph);
        let (cert, stats) = minor_search_stats(&h, &p);
        match cert {
            Some(c) => {
                println!("{host} > {pattern}: yes, certificate valid = {}", verify_minor(&h, &p, &c));
                for (v, set) in c.branch_sets.iter().enumerate() {
                    let names: Vec<String> = set.iter().map(|&x| h.display_vertex(x)).collect();
                    println!("  {} <- {{{}}}", p.display_vertex(v), names.join(", "));
                }
            }
            None => println!("{host} > {pattern}: no"),
        }
        println!("  {stats:?}");
    }
    assert!(has_minor(&builtin("K34").unwrap().graph, &builtin("K23").unwrap().graph).is_some());
}
