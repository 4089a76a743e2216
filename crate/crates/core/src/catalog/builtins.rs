use crate::graph::{line_graph, Graph};

use super::{CatalogError, Expectations, NamedGraph, Provenance};

pub const BUILTIN_NAMES: &[&str] =
    &["K34", "Qplus", "Herschel", "V8", "Cube", "Wheel(n)", "D17", "E20", "E22", "F4", "K33", "LineK33", "K23"];

fn labeled(labels: &[String], edges: &[(String, String)]) -> Graph {
    let idx = |l: &str| labels.iter().position(|x| x == l).unwrap_or_else(|| panic!("unknown label {l}"));
    let e: Vec<_> = edges.iter().map(|(a, b)| (idx(a), idx(b))).collect();
    Graph::from_edges(labels.len(), &e).unwrap().with_labels(labels.to_vec()).unwrap()
}

fn s(x: impl Into<String>) -> String {
    x.into()
}

fn named(name: &str, graph: Graph, expectations: Expectations) -> NamedGraph {
    NamedGraph { name: name.to_string(), graph, expectations, provenance: Provenance::PaperText }
}

fn cycle_labels(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|l| l.to_string()).collect()
}

pub fn k34() -> NamedGraph {
    let three = ["k1", "k2", "k3"];
    let four = ["k1_1", "k1_2", "k2_1", "k2_2"];
    let labels: Vec<String> = three.iter().chain(&four).map(|&l| s(l)).collect();
    let edges: Vec<_> = three.iter().flat_map(|a| four.iter().map(move |b| (s(*a), s(*b)))).collect();
    named(
        "K34",
        labeled(&labels, &edges),
        Expectations {
            order: Some(7),
            size: Some(12),
            aut_order: Some(144),
            connectivity: Some(3),
            hamiltonian: Some(false),
            bipartite_odd: Some(true),
            ..Default::default()
        },
    )
}

fn cube_parts() -> (Vec<String>, Vec<(String, String)>) {
    let labels: Vec<String> = (0..8).map(|i| format!("c{:03b}", i)).collect();
    let mut edges = Vec::new();
    for i in 0..8usize {
        for b in 0..3 {
            let j = i ^ (1 << b);
            if i < j {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    (labels, edges)
}

pub fn cube() -> NamedGraph {
    let (labels, edges) = cube_parts();
    named(
        "Cube",
        labeled(&labels, &edges),
        Expectations {
            order: Some(8),
            size: Some(12),
            aut_order: Some(48),
            connectivity: Some(3),
            hamiltonian: Some(true),
            ..Default::default()
        },
    )
}

pub fn qplus() -> NamedGraph {
    let (mut labels, mut edges) = cube_parts();
    labels.push(s("q"));
    for l in ["c001", "c010", "c100"] {
        edges.push((s("q"), s(l)));
    }
    named(
        "Qplus",
        labeled(&labels, &edges),
        Expectations {
            order: Some(9),
            size: Some(15),
            aut_order: Some(12),
            connectivity: Some(3),
            hamiltonian: Some(false),
            bipartite_odd: Some(true),
            ..Default::default()
        },
    )
}

pub fn herschel() -> NamedGraph {
    let mut labels = vec![s("N"), s("S"), s("E1"), s("E2"), s("E3")];
    let mut edges = Vec::new();
    for pole in ["N", "S"] {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let b = format!("b{pole}{i}{j}");
            labels.push(b.clone());
            edges.push((b.clone(), s(pole)));
            edges.push((b.clone(), format!("E{i}")));
            edges.push((b, format!("E{j}")));
        }
    }
    named(
        "Herschel",
        labeled(&labels, &edges),
        Expectations {
            order: Some(11),
            size: Some(18),
            aut_order: Some(12),
            connectivity: Some(3),
            hamiltonian: Some(false),
            bipartite_odd: Some(true),
            must_not_contain_minors: vec![s("K34"), s("Qplus")],
            ..Default::default()
        },
    )
}

pub fn v8() -> NamedGraph {
    let labels: Vec<String> = (1..=8).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((labels[i].clone(), labels[(i + 1) % 8].clone()));
        if i < 4 {
            edges.push((labels[i].clone(), labels[i + 4].clone()));
        }
    }
    named(
        "V8",
        labeled(&labels, &edges),
        Expectations {
            order: Some(8),
            size: Some(12),
            aut_order: Some(16),
            connectivity: Some(3),
            hamiltonian: Some(true),
            ..Default::default()
        },
    )
}

/// Cycle `r1 .. rn` plus a hub `h` joined to every rim vertex.
pub fn wheel(n: usize) -> Result<NamedGraph, CatalogError> {
    if !(3..=63).contains(&n) {
        return Err(CatalogError::UnknownName(format!("Wheel({n})")));
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
    labels.push(s("h"));
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((labels[i].clone(), labels[(i + 1) % n].clone()));
        edges.push((labels[i].clone(), s("h")));
    }
    Ok(named(
        &format!("Wheel({n})"),
        labeled(&labels, &edges),
        Expectations { order: Some(n + 1), size: Some(2 * n), connectivity: Some(3), hamiltonian: Some(true), ..Default::default() },
    ))
}

pub fn k33() -> NamedGraph {
    let labels = vec![s("a1"), s("a2"), s("a3"), s("b1"), s("b2"), s("b3")];
    let mut edges = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            edges.push((format!("a{a}"), format!("b{b}")));
        }
    }
    named(
        "K33",
        labeled(&labels, &edges),
        Expectations {
            order: Some(6),
            size: Some(9),
            aut_order: Some(72),
            internally_4_connected: Some(true),
            hamiltonian: Some(true),
            ..Default::default()
        },
    )
}

pub fn line_k33() -> NamedGraph {
    let g = line_graph(&k33().graph).unwrap();
    named(
        "LineK33",
        g,
        Expectations { order: Some(9), size: Some(18), aut_order: Some(72), hamiltonian: Some(true), ..Default::default() },
    )
}

pub fn k23() -> NamedGraph {
    let labels = vec![s("a1"), s("a2"), s("b1"), s("b2"), s("b3")];
    let mut edges = Vec::new();
    for a in 1..=2 {
        for b in 1..=3 {
            edges.push((format!("a{a}"), format!("b{b}")));
        }
    }
    named(
        "K23",
        labeled(&labels, &edges),
        Expectations { order: Some(5), size: Some(6), aut_order: Some(12), connectivity: Some(2), hamiltonian: Some(false), bipartite_odd: Some(true), ..Default::default() },
    )
}

/// Two copies of K4 on `d1_i` and `d2_i` joined by the matching `d1_i d2_i`.
pub fn d17() -> NamedGraph {
    let labels: Vec<String> = (1..=2).flat_map(|a| (1..=4).map(move |i| format!("d{a}_{i}"))).collect();
    let mut edges = Vec::new();
    for a in 1..=2 {
        for i in 1..=4 {
            for j in i + 1..=4 {
                edges.push((format!("d{a}_{i}"), format!("d{a}_{j}")));
            }
        }
    }
    for i in 1..=4 {
        edges.push((format!("d1_{i}"), format!("d2_{i}")));
    }
    named(
        "D17",
        labeled(&labels, &edges),
        Expectations {
            order: Some(8),
            size: Some(16),
            aut_order: Some(48),
            internally_4_connected: Some(true),
            hamiltonian: Some(true),
            must_not_contain_minors: vec![s("K34"), s("Qplus")],
            ..Default::default()
        },
    )
}

pub fn e20() -> NamedGraph {
    let labels: Vec<String> = ["e0", "e1_1", "e1_2", "e1_3", "e2", "e3_1", "e3_2", "e3_3", "e4"].iter().map(|&l| s(l)).collect();
    let mut edges = vec![(s("e0"), s("e2"))];
    for i in 1..=3 {
        edges.push((s("e0"), format!("e1_{i}")));
        edges.push((format!("e1_{i}"), format!("e3_{i}")));
        edges.push((s("e2"), format!("e3_{i}")));
        edges.push((format!("e3_{i}"), s("e4")));
        for j in i + 1..=3 {
            edges.push((format!("e1_{i}"), format!("e1_{j}")));
        }
    }
    named(
        "E20",
        labeled(&labels, &edges),
        Expectations {
            order: Some(9),
            size: Some(16),
            aut_order: Some(6),
            internally_4_connected: Some(true),
            hamiltonian: Some(true),
            must_not_contain_minors: vec![s("K34"), s("Qplus")],
            hamilton_cycles: vec![cycle_labels(&["e0", "e2", "e3_3", "e1_3", "e1_1", "e3_1", "e4", "e3_2", "e1_2"])],
            split_classes: Some(4),
            ..Default::default()
        },
    )
}

pub fn e22() -> NamedGraph {
    let mut labels = vec![s("eps0")];
    labels.extend((1..=4).map(|i| format!("eps1_{i}")));
    labels.extend((1..=4).map(|i| format!("eps2_{i}")));
    let mut edges = Vec::new();
    for i in 0..4 {
        for d in [0, 1, 3] {
            edges.push((format!("eps1_{}", i + 1), format!("eps2_{}", (i + d) % 4 + 1)));
        }
        edges.push((s("eps0"), format!("eps2_{}", i + 1)));
    }
    named(
        "E22",
        labeled(&labels, &edges),
        Expectations {
            order: Some(9),
            size: Some(16),
            aut_order: Some(24),
            internally_4_connected: Some(true),
            hamiltonian: Some(false),
            bipartite_odd: Some(true),
            must_contain_minors: vec![s("Qplus")],
            must_not_contain_minors: vec![s("K34")],
            ..Default::default()
        },
    )
}

pub fn f4() -> NamedGraph {
    let mut labels = Vec::new();
    for i in 1..=2 {
        labels.push(format!("f{i}"));
        labels.extend((1..=4).map(|j| format!("f{i}_{j}")));
    }
    let mut edges = Vec::new();
    for i in 1..=2 {
        for j in [1, 2, 4] {
            edges.push((format!("f{i}"), format!("f{i}_{j}")));
            edges.push((format!("f{i}_3"), format!("f{i}_{j}")));
        }
    }
    for j in 1..=4 {
        edges.push((format!("f1_{j}"), format!("f2_{}", 5 - j)));
    }
    named(
        "F4",
        labeled(&labels, &edges),
        Expectations {
            order: Some(10),
            size: Some(16),
            aut_order: Some(4),
            internally_4_connected: Some(true),
            hamiltonian: Some(true),
            triangle_free: Some(true),
            must_not_contain_minors: vec![s("K34"), s("Qplus")],
            hamilton_cycles: vec![cycle_labels(&["f1", "f1_1", "f2_4", "f2", "f2_2", "f1_3", "f1_4", "f2_1", "f2_3", "f1_2"])],
            split_classes: Some(2),
            ..Default::default()
        },
    )
}

pub fn builtin(name: &str) -> Result<NamedGraph, CatalogError> {
    let norm = name.trim();
    if let Some(rest) = norm.strip_prefix("Wheel(").and_then(|r| r.strip_suffix(')')) {
        let n = rest.parse().map_err(|_| CatalogError::UnknownName(name.to_string()))?;
        return wheel(n);
    }
    Ok(match norm {
        "K34" => k34(),
        "Qplus" => qplus(),
        "Herschel" => herschel(),
        "V8" => v8(),
        "Cube" => cube(),
        "D17" => d17(),
        "E20" => e20(),
        "E22" => e22(),
        "F4" => f4(),
        "K33" => k33(),
        "LineK33" => line_k33(),
        "K23" => k23(),
        _ => return Err(CatalogError::UnknownName(name.to_string())),
    })
}

/// Every builtin, with `Wheel(n)` instantiated at `n = 4` and `n = 5`.
pub fn all_builtins() -> Vec<NamedGraph> {
    let mut out: Vec<NamedGraph> =
        BUILTIN_NAMES.iter().filter(|&&n| n != "Wheel(n)").map(|n| builtin(n).unwrap()).collect();
    out.push(wheel(4).unwrap());
    out.push(wheel(5).unwrap());
    out
}
