//! Checks every builtin against its recorded expectations, then a collection file if one is given.

use minorsmith::catalog::{all_builtins, load_collection, validate};

fn main() {
    let mut graphs = all_builtins();
    if let Some(path) = std::env::args().nth(1) {
        graphs.extend(load_collection(path.as_ref()).expect("collection parses"));
    }
    for ng in &graphs {
        let r = validate(ng);
        println!("{}", r.summary_line());
        for c in r.failing_cases() {
            println!("  FAIL {}: {}", c.description, c.detail);
        }
    }
}
