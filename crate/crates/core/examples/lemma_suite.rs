//! Runs the registered case analyses and prints one line per statement.
//!
//! `cargo run --release --example lemma_suite [STATEMENT...]`; with no
//! arguments every statement except the heavy ones runs.

use minorsmith::lemmas::{registry, Suite};

fn main() {
    let suite = Suite::from_env().expect("catalog loads");
    let wanted: Vec<String> = std::env::args().skip(1).collect();
    for st in registry() {
        if wanted.is_empty() && st.heavy || !wanted.is_empty() && !wanted.contains(&st.id) {
            continue;
        }
        let r = suite.run(&st);
        println!("{:<32} {:>8} ms  {}", st.id, r.elapsed_ms.unwrap_or(0), r.summary_line());
        for note in &r.notes {
            println!("    note: {note}");
        }
        for c in r.failing_cases().take(5) {
            println!("    FAIL {}: {}", c.description, c.detail);
        }
    }
}
