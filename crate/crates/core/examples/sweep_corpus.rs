//! Sweeps the bundled corpora: 4-connected non-hamiltonian graphs against K34,
//! and 2-connected non-hamiltonian graphs against K23.

use std::time::Instant;

use minorsmith::sweep::{sweep, Filters, SweepSpec};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus");
    let runs = [
        (format!("{dir}/mindeg4_n5-10.g6.gz"), "K34", 4),
        (format!("{dir}/biconnected_n3-8.g6"), "K23", 2),
    ];
    for (source, minor, k) in runs {
        let mut spec = SweepSpec::new(source, &[minor]);
        spec.filters = Filters { connectivity: Some(k), non_hamiltonian: true, ..Default::default() };
        let start = Instant::now();
        let report = sweep(&spec).expect("corpus sweeps");
        println!("{} [{:.1} s]", report.notes[0], start.elapsed().as_secs_f64());
        for c in report.failing_cases() {
            println!("  {}: {}", c.description, c.detail);
        }
    }
}
