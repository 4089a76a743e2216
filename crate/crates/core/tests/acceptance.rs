//! One pass/fail line per acceptance criterion. Runs as a plain binary so the
//! lines are always printed; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use minorsmith::canon::automorphism_group;
use minorsmith::catalog::{builtin, NamedGraph};
use minorsmith::connectivity::{is_internally_4_connected, is_k_connected};
use minorsmith::graph::{Edit, Graph, SplitSpec, VertexSet};
use minorsmith::io::from_graph6;
use minorsmith::lemmas::Suite;
use minorsmith::minor::{
    has_minor, hamilton_held_karp, is_hamiltonian, verify_certificate, verify_hamilton_cycle,
    verify_subdivision, Witness,
};
use minorsmith::minor::oracle::{hamiltonian_brute_force, oracle_has_minor};
use minorsmith::report::{Status, VerificationReport};
use minorsmith::splitter::promotion_check;
use minorsmith::structure::bipartition;
use minorsmith::sweep::{parse_records, sweep, sweep_records, Filters, SweepSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus");

struct Outcome {
    pass: bool,
    detail: String,
    /// Cannot pass in this checkout; reported as FAIL but does not fail the run.
    unattainable: bool,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), unattainable: false }
}

/// Tally of certificates checked for the soundness criterion.
#[derive(Default)]
struct Certificates {
    checked: usize,
    rejected: usize,
}

impl Certificates {
    fn check(&mut self, host: &Graph, w: &Witness, pattern: Option<&Graph>) {
        self.checked += 1;
        if !verify_certificate(host, w, pattern) {
            self.rejected += 1;
        }
    }

    fn check_report(&mut self, r: &VerificationReport) {
        for c in &r.cases {
            let (Some(w), Some(g6)) = (&c.witness, &c.graph6) else { continue };
            let host = from_graph6(g6).unwrap();
            let pattern = c.witness_pattern.as_deref().map(|p| builtin(p).unwrap().graph);
            self.check(&host, w, pattern.as_ref());
        }
    }
}

fn g(name: &str) -> Graph {
    builtin(name).unwrap().graph
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t <= limit, format!("{:.2} s of {} s", t.as_secs_f64(), limit.as_secs()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let want = [("D17", 48u32), ("E20", 6), ("E22", 24), ("F4", 4)];
    let got: Vec<(String, String)> = want.iter().map(|(n, _)| (n.to_string(), automorphism_group(&g(n)).order.to_string())).collect();
    let exact = want.iter().zip(&got).all(|((_, w), (_, o))| w.to_string() == *o);
    let (fast, t) = within(Duration::from_secs(1), start);
    outcome(exact && fast, format!("{got:?}; {t}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let names = ["D17", "E20", "E22", "F4", "K33"];
    let bad: Vec<&str> = names.iter().copied().filter(|n| !is_internally_4_connected(&g(n))).collect();
    let (fast, t) = within(Duration::from_secs(1), start);
    outcome(bad.is_empty() && fast, format!("not internally 4-connected: {bad:?}; {t}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut ok = is_hamiltonian(&g("D17")).is_some() && is_hamiltonian(&g("LineK33")).is_some();
    let mut orders = Vec::new();
    for (name, n) in [("K34", 7), ("Qplus", 9), ("Herschel", 11)] {
        let h = g(name);
        ok &= is_hamiltonian(&h).is_none() && bipartition(&h).is_some() && h.order() == n;
        orders.push(h.order());
    }
    let (fast, t) = within(Duration::from_secs(1), start);
    outcome(ok && fast, format!("odd orders {orders:?}; {t}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut lens = Vec::new();
    for name in ["F4", "E20"] {
        let ng: NamedGraph = builtin(name).unwrap();
        for seq in &ng.expectations.hamilton_cycles {
            let order: Vec<usize> = seq.iter().map(|l| ng.vertex(l)).collect();
            lens.push(order.len());
            ok &= verify_hamilton_cycle(&ng.graph, &minorsmith::minor::HamiltonCycle { order });
        }
    }
    ok &= lens == [10, 9];
    let (fast, t) = within(Duration::from_secs(1), start);
    outcome(ok && fast, format!("cycle lengths {lens:?}; {t}"))
}

fn criterion_5(certs: &mut Certificates) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut row = |host: &str, pattern: &str, expect: bool| {
        let (h, p) = (g(host), g(pattern));
        let found = has_minor(&h, &p);
        if let Some(c) = &found {
            certs.check(&h, &Witness::Minor(c.clone()), Some(&p));
        }
        ok &= found.is_some() == expect;
    };
    for host in ["D17", "E20", "E22", "F4"] {
        row(host, "K34", false);
    }
    for host in ["D17", "E20", "F4"] {
        row(host, "Qplus", false);
    }
    row("E22", "Qplus", true);
    let (fast, t) = within(Duration::from_secs(10), start);
    outcome(ok && fast, format!("8 entries; {t}"))
}

fn criterion_6(certs: &mut Certificates) -> (Outcome, Outcome) {
    let suite = Suite::default();
    let start = Instant::now();
    let light = suite.verify_all(1, false).unwrap();
    let (light_fast, t_light) = within(Duration::from_secs(120), start);
    let start = Instant::now();
    let heavy = suite.verify("D17-ext-split").unwrap();
    let (heavy_fast, t_heavy) = within(Duration::from_secs(600), start);
    for r in light.iter().chain([&heavy]) {
        certs.check_report(r);
    }

    let find = |id: &str| light.iter().find(|r| r.statement_id == id).unwrap();
    let counts_ok = find("E20-split").cases_up_to_symmetry == Some(4)
        && find("F4-split").cases_up_to_symmetry == Some(2)
        && find("F4+I").cases_up_to_symmetry == Some(4)
        && find("E20+Y-clique").cases_up_to_symmetry == Some(2)
        && find("E22-eps1-split-unique").status == Status::Pass;
    let failed: Vec<&str> = light.iter().chain([&heavy]).filter(|r| r.status == Status::Fail).map(|r| r.statement_id.as_str()).collect();
    let missing: Vec<&str> = light.iter().filter(|r| r.status == Status::DataMissing).map(|r| r.statement_id.as_str()).collect();

    let main = outcome(
        failed.is_empty() && counts_ok && light_fast && heavy_fast,
        format!("{} statements, failed {failed:?}; without D17-ext-split {t_light}; D17-ext-split {t_heavy}", light.len() + 1),
    );
    // The obstruction list is external data; without it the statement cannot pass.
    let alist = match std::env::var_os("MINORSMITH_ALIST") {
        Some(_) => {
            let r = Suite::from_env().unwrap().verify("archdeacon-19").unwrap();
            outcome(r.status == Status::Pass, r.summary_line())
        }
        None => Outcome {
            unattainable: !missing.is_empty(),
            ..outcome(missing.is_empty(), format!("data-missing: {missing:?}; no obstruction list ships with the repository (set MINORSMITH_ALIST)"))
        },
    };
    (main, alist)
}

fn random_graph(rng: &mut impl Rng, order: std::ops::RangeInclusive<usize>, density: std::ops::Range<f64>) -> Graph {
    let (n, p) = (rng.gen_range(order), rng.gen_range(density));
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn criterion_7(certs: &mut Certificates) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut disagree = 0;
    let mut positives = 0;
    let pairs = 10_000;
    for _ in 0..pairs {
        let host = random_graph(&mut rng, 1..=9, 0.2..0.9);
        let pattern = random_graph(&mut rng, 1..=6, 0.2..0.9);
        let found = has_minor(&host, &pattern);
        if let Some(c) = &found {
            positives += 1;
            certs.check(&host, &Witness::Minor(c.clone()), Some(&pattern));
        }
        if found.is_some() != oracle_has_minor(&host, &pattern).unwrap() {
            disagree += 1;
        }
    }
    let mut ham_disagree = 0;
    let graphs = 1_000;
    for _ in 0..graphs {
        let h = random_graph(&mut rng, 1..=9, 0.2..0.8);
        let c = is_hamiltonian(&h);
        if let Some(c) = &c {
            certs.check(&h, &Witness::HamiltonCycle(c.clone()), None);
        }
        if c.is_some() != hamiltonian_brute_force(&h) {
            ham_disagree += 1;
        }
    }
    outcome(
        disagree == 0 && ham_disagree == 0,
        format!("{pairs} minor pairs ({positives} positive), {disagree} disagreements; {graphs} hamiltonicity checks, {ham_disagree} disagreements"),
    )
}

/// A random valid split of a vertex of degree at least 4, if any.
fn random_split(rng: &mut impl Rng, g: &Graph) -> Option<Graph> {
    let candidates: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) >= 4).collect();
    let v = *candidates.choose(rng)?;
    let mut nbrs: Vec<usize> = g.neighbors(v).iter().collect();
    nbrs.shuffle(rng);
    let cut = rng.gen_range(2..=nbrs.len() - 2);
    let keep: VertexSet = nbrs[..cut].iter().copied().collect();
    let moved: VertexSet = nbrs[cut..].iter().copied().collect();
    g.split(&SplitSpec::new(v, keep, moved)).ok()
}

/// Grows a 3-connected host containing `pattern` as a minor by random
/// subdivisions, edge additions and splits.
fn grown_host(rng: &mut impl Rng, pattern: &Graph, max_n: usize) -> Graph {
    let mut h = pattern.clone().without_labels();
    for _ in 0..rng.gen_range(0..6) {
        let next = match rng.gen_range(0..3) {
            0 if h.order() < max_n => {
                let edges: Vec<_> = h.edges().collect();
                let &(u, v) = edges.choose(rng).unwrap();
                let s = h.apply(&Edit::SubdivideEdge { u, v }).unwrap();
                let x = s.order() - 1;
                let others: Vec<usize> = (0..x).filter(|&w| w != u && w != v).collect();
                let &w = others.choose(rng).unwrap();
                s.apply(&Edit::AddEdge { u: x, v: w }).unwrap()
            }
            1 if h.order() < max_n => match random_split(rng, &h) {
                Some(s) => s,
                None => continue,
            },
            _ => {
                let non_edges: Vec<(usize, usize)> =
                    (0..h.order()).flat_map(|u| (u + 1..h.order()).map(move |v| (u, v))).filter(|&(u, v)| !h.has_edge(u, v)).collect();
                match non_edges.choose(rng) {
                    Some(&(u, v)) => h.apply(&Edit::AddEdge { u, v }).unwrap(),
                    None => continue,
                }
            }
        };
        if is_k_connected(&next, 3) {
            h = next;
        }
    }
    h
}

fn criterion_8(certs: &mut Certificates) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let patterns: Vec<(&str, Graph)> = ["V8", "E20", "F4"].iter().map(|n| (*n, g(n))).collect();
    let mut hosts = Vec::new();
    while hosts.len() < 1_000 {
        let h = if hosts.len() % 4 == 3 {
            random_graph(&mut rng, 8..=12, 0.3..0.6)
        } else {
            grown_host(&mut rng, &patterns[hosts.len() % 3].1, 12)
        };
        if h.order() <= 12 && is_k_connected(&h, 3) {
            hosts.push(h);
        }
    }
    let (mut violations, mut with_minor, mut promoted) = (0, 0, 0);
    for h in &hosts {
        for (_, p) in &patterns {
            let r = promotion_check(h, p);
            with_minor += r.has_minor as usize;
            if let Some(m) = &r.subdivision {
                promoted += 1;
                certs.check(h, &Witness::Subdivision(m.clone()), Some(p));
                if !verify_subdivision(h, p, m) {
                    violations += 1;
                }
            }
            if !r.holds {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{} hosts x 3 patterns: {with_minor} with the minor, {promoted} promoted to subdivisions, {violations} violations", hosts.len()),
    )
}

fn criterion_9(certs: &mut Certificates) -> Outcome {
    let start = Instant::now();
    let mut spec = SweepSpec::new(format!("{CORPUS}/mindeg4_n5-10.g6.gz"), &["K34"]);
    spec.filters = Filters { connectivity: Some(4), non_hamiltonian: true, ..Default::default() };
    spec.jobs = Some(8);
    spec.keep_witnesses = true;
    let big = sweep(&spec).unwrap();
    let (fast, t) = within(Duration::from_secs(1800), start);
    certs.check_report(&big);
    let bc = big.sweep.unwrap();
    // Held-Karp agrees that every filtered-in graph is non-hamiltonian.
    let oracle_ok = big.cases.iter().all(|c| hamilton_held_karp(&from_graph6(c.graph6.as_ref().unwrap()).unwrap()).is_none());

    let text = std::fs::read_to_string(format!("{CORPUS}/biconnected_n3-8.g6")).unwrap();
    let records = parse_records(&text).unwrap();
    let mut small_spec = SweepSpec::new("biconnected_n3-8.g6", &["K23"]);
    small_spec.filters = Filters { connectivity: Some(2), non_hamiltonian: true, max_order: Some(8), ..Default::default() };
    small_spec.keep_witnesses = true;
    let small = sweep_records(&small_spec, &records).unwrap();
    certs.check_report(&small);
    let sc = small.sweep.unwrap();
    let brute_nonham = records.iter().filter(|r| !hamiltonian_brute_force(&r.graph)).count();

    outcome(
        big.passed() && small.passed() && bc.failed + sc.failed == 0 && fast && oracle_ok && brute_nonham == sc.filtered_in,
        format!(
            "4-connected n<=10: {} scanned, {} non-hamiltonian, {} failed, {t}; 2-connected n<=8: {} scanned, {} non-hamiltonian (brute force {brute_nonham}), {} failed",
            bc.scanned, bc.filtered_in, bc.failed, sc.scanned, sc.filtered_in, sc.failed
        ),
    )
}

fn main() {
    let mut certs = Certificates::default();
    let mut lines: Vec<(String, Outcome)> = vec![
        ("1 automorphism orders".into(), criterion_1()),
        ("2 internal 4-connectivity".into(), criterion_2()),
        ("3 hamiltonicity".into(), criterion_3()),
        ("4 Hamilton-cycle skeletons".into(), criterion_4()),
        ("5 minor-freeness matrix".into(), criterion_5(&mut certs)),
    ];
    let (six, six_alist) = criterion_6(&mut certs);
    lines.push(("6 lemma suite".into(), six));
    lines.push(("6 obstruction-list statement".into(), six_alist));
    lines.push(("7 engine vs oracle".into(), criterion_7(&mut certs)));
    lines.push(("8 promotion property".into(), criterion_8(&mut certs)));
    lines.push(("9 corpus sweeps".into(), criterion_9(&mut certs)));
    lines.push((
        "10 certificate soundness".into(),
        outcome(certs.rejected == 0 && certs.checked > 0, format!("{} witnesses checked, {} rejected", certs.checked, certs.rejected)),
    ));

    let mut all = true;
    for (name, o) in &lines {
        all &= o.pass || o.unattainable;
        let tag = if o.unattainable { " [unattainable here]" } else { "" };
        println!("criterion {name}: {}{tag} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
