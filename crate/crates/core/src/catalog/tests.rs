use super::*;
use crate::canon::is_automorphism;
use crate::structure::degree_sequence;

fn brute_force_aut(g: &Graph) -> u64 {
    fn go(g: &Graph, perm: &mut Vec<Vertex>, used: VertexSet) -> u64 {
        let k = perm.len();
        if k == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in g.vertices() - used {
            if g.degree(w) == g.degree(k) && (0..k).all(|u| g.has_edge(u, k) == g.has_edge(perm[u], w)) {
                perm.push(w);
                total += go(g, perm, used | VertexSet::singleton(w));
                perm.pop();
            }
        }
        total
    }
    go(g, &mut Vec::new(), VertexSet::EMPTY)
}

#[test]
fn every_builtin_validates() {
    for ng in all_builtins() {
        let r = validate(&ng);
        for c in r.failing_cases() {
            eprintln!("{}: {} ({})", ng.name, c.description, c.detail);
        }
        assert!(r.passed(), "{} failed validation", ng.name);
    }
}

#[test]
fn automorphism_counts_match_brute_force() {
    for ng in all_builtins() {
        if let Some(a) = ng.expectations.aut_order {
            assert_eq!(brute_force_aut(&ng.graph), a, "{}", ng.name);
        }
        for p in automorphism_group(&ng.graph).generators {
            assert!(is_automorphism(&ng.graph, &p));
        }
    }
}

#[test]
fn reconstructed_degree_sequences() {
    assert_eq!(degree_sequence(&builtin("E20").unwrap().graph), vec![4, 4, 4, 4, 4, 3, 3, 3, 3]);
    let v8 = builtin("V8").unwrap().graph;
    assert!((0..8).all(|v| v.degree_check(&v8)));
    let f4 = builtin("F4").unwrap();
    let fours: Vec<String> = (0..10).filter(|&v| f4.graph.degree(v) == 4).map(|v| f4.graph.display_vertex(v)).collect();
    assert_eq!(fours, vec!["f1_3", "f2_3"]);
}

trait DegreeCheck {
    fn degree_check(self, g: &Graph) -> bool;
}

impl DegreeCheck for Vertex {
    fn degree_check(self, g: &Graph) -> bool {
        g.degree(self) == 3
    }
}

#[test]
fn e20_non_edges_at_e0() {
    let e = builtin("E20").unwrap();
    let e0 = e.vertex("e0");
    let non: Vec<String> = (0..9).filter(|&v| v != e0 && !e.graph.has_edge(e0, v)).map(|v| e.graph.display_vertex(v)).collect();
    assert_eq!(non, vec!["e3_1", "e3_2", "e3_3", "e4"]);
}

#[test]
fn k34_parts() {
    let k = builtin("K34").unwrap();
    let (a, b) = bipartition(&k.graph).unwrap();
    assert_eq!(a, k.vertices(&["k1", "k2", "k3"]));
    assert_eq!(b, k.vertices(&["k1_1", "k1_2", "k2_1", "k2_2"]));
}

#[test]
fn independent_triples_of_the_cube_form_one_orbit() {
    let cube = builtin("Cube").unwrap().graph;
    let mut triples = Vec::new();
    crate::connectivity::any_subset(cube.vertices(), 3, &mut |s| {
        if cube.is_independent(s) {
            triples.push(s);
        }
        false
    });
    assert_eq!(triples.len(), 8);
    let reps = crate::orbits::orbit_representatives(&cube, &triples, &crate::orbits::SetAction);
    assert_eq!(reps.len(), 1);
}

#[test]
fn unknown_names() {
    assert!(matches!(builtin("K99"), Err(CatalogError::UnknownName(_))));
    assert!(builtin("Wheel(6)").is_ok());
}

#[test]
fn collections() {
    assert!(parse_collection("").unwrap().is_empty());
    let text = r#"[
        {"name": "tri", "n": 3, "edges": [[0,1],[1,2],[0,2]], "expectations": {"aut_order": 6}},
        {"name": "k4", "graph6": "C~", "labels": {"a":0,"b":1,"c":2,"d":3}}
    ]"#;
    let c = parse_collection(text).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c[1].provenance, Provenance::ExternalData);
    assert_eq!(c[1].vertex("c"), 2);
    assert!(validate(&c[0]).passed());
    let bad = r#"[{"name": "x", "adjacency": [[1],[]]}]"#;
    assert!(matches!(parse_collection(bad), Err(CatalogError::ParseError { .. })));
    let dup = r#"[{"name": "x", "graph6": "Bw"}, {"name": "x", "graph6": "Bw"}]"#;
    assert!(matches!(parse_collection(dup), Err(CatalogError::DuplicateName(_))));
}

#[test]
fn failing_external_entry_is_reported() {
    let text = r#"[{"name": "c5", "graph6": "Dhc", "expectations": {"must_contain_one_of": ["K34", "Qplus"]}}]"#;
    let c = parse_collection(text).unwrap();
    let r = validate(&c[0]);
    assert!(!r.passed());
}
