use std::collections::HashMap;

use crate::canon::{are_isomorphic, canonical_form};
use crate::connectivity::is_k_connected;
use crate::graph::{Edit, Graph, SplitSpec, VertexSet};
use crate::io::parse_graph6_stream;
use crate::minor::is_hamiltonian;

use super::cases::{self, edge_string, split_string, Case, CaseGenerator, Param, SetFilter};
use super::{Conclusion, Generated, Statement, Suite};

const SMALL_CONNECTED: &str = include_str!("../../data/corpus/connected_n1-7.g6");

fn s(x: &str) -> String {
    x.to_string()
}

fn minors(names: &[&str]) -> Conclusion {
    Conclusion::AnyMinor { minors: names.iter().map(|n| s(n)).collect() }
}

fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
    p.iter().map(|&(a, b)| (s(a), s(b))).collect()
}

fn statement(id: &str, claim: &str, base: &str, generator: CaseGenerator, conclusion: Conclusion) -> Statement {
    Statement {
        id: s(id),
        claim: s(claim),
        base: s(base),
        generator,
        conclusion,
        expected_cases: None,
        reduce_by_isomorphism: false,
        settled_pairs: Vec::new(),
        heavy: false,
    }
}

fn custom(name: &str) -> CaseGenerator {
    CaseGenerator::Custom { name: s(name) }
}

const E20_I: [(&str, &str); 4] = [("e0", "e3_1"), ("e0", "e3_2"), ("e0", "e3_3"), ("e0", "e4")];

const F4_I: [(&str, &str); 8] = [
    ("f1_1", "f2_2"),
    ("f1_2", "f2_4"),
    ("f1_2", "f2_1"),
    ("f1_4", "f2_2"),
    ("f1_2", "f2_2"),
    ("f1", "f2_2"),
    ("f1_2", "f2"),
    ("f1", "f2"),
];

/// Every registered statement, in a fixed order.
pub fn registry() -> Vec<Statement> {
    let k34_e20 = || minors(&["K34", "E20"]);
    let k34_f4 = || minors(&["K34", "F4"]);
    let k34 = || minors(&["K34"]);
    vec![
        Statement {
            heavy: true,
            reduce_by_isomorphism: true,
            ..statement(
                "D17-ext-split",
                "adding any edges to D17 and then splitting a vertex gives a K34 or E20 minor",
                "D17",
                CaseGenerator::EdgeSupersetsThenSplit,
                k34_e20(),
            )
        },
        Statement {
            expected_cases: Some(4),
            reduce_by_isomorphism: true,
            ..statement("E20-split", "every split of E20 has a K34 or F4 minor", "E20", CaseGenerator::Splits { at: None }, k34_f4())
        },
        statement(
            "E20+I",
            "adding e0e3_i or e0e4 to E20 gives a K34 minor",
            "E20",
            CaseGenerator::EdgeAdditions { pairs: pairs(&E20_I) },
            k34(),
        ),
        Statement {
            expected_cases: Some(2),
            settled_pairs: pairs(&E20_I),
            ..statement(
                "E20+Y-clique",
                "an apex on a triangle of E20 gives a K34 or F4 minor",
                "E20",
                CaseGenerator::Apex { k: 3, filter: SetFilter::Clique },
                k34_f4(),
            )
        },
        Statement {
            expected_cases: Some(3),
            settled_pairs: pairs(&E20_I),
            ..statement(
                "E20+Y-indep",
                "an apex on an independent triple of E20 gives a K34 or F4 minor",
                "E20",
                CaseGenerator::Apex { k: 3, filter: SetFilter::Independent },
                k34_f4(),
            )
        },
        Statement {
            settled_pairs: pairs(&E20_I),
            ..statement(
                "E20+X",
                "an apex on any four vertices of E20 gives a K34 or F4 minor",
                "E20",
                CaseGenerator::Apex { k: 4, filter: SetFilter::All },
                k34_f4(),
            )
        },
        Statement {
            expected_cases: Some(11),
            settled_pairs: pairs(&E20_I),
            ..statement(
                "E20+H",
                "joining subdivisions of two independent edges of E20 gives a K34 or F4 minor",
                "E20",
                CaseGenerator::DoubleSubdivideAndJoin,
                k34_f4(),
            )
        },
        Statement {
            expected_cases: Some(2),
            reduce_by_isomorphism: true,
            ..statement("F4-split", "every split of F4 has a K34 minor", "F4", CaseGenerator::Splits { at: None }, k34())
        },
        Statement {
            expected_cases: Some(4),
            reduce_by_isomorphism: true,
            ..statement(
                "F4+I",
                "adding any of the eight listed edges to F4 gives a K34 minor",
                "F4",
                CaseGenerator::EdgeAdditions { pairs: pairs(&F4_I) },
                k34(),
            )
        },
        statement(
            "F4+Y",
            "an apex on an independent triple of F4 gives a K34 minor, except two triples which give a Qplus minor",
            "F4",
            CaseGenerator::Apex { k: 3, filter: SetFilter::All },
            Conclusion::ApexRule {
                exceptional: vec![vec![s("f1_1"), s("f1_4"), s("f2")], vec![s("f2_1"), s("f2_4"), s("f1")]],
                exceptional_minor: s("Qplus"),
                otherwise: s("K34"),
            },
        ),
        statement("F4+X", "an apex on any four vertices of F4 gives a K34 minor", "F4", CaseGenerator::Apex { k: 4, filter: SetFilter::All }, k34()),
        statement(
            "F4+H",
            "joining subdivisions of two independent edges of F4 gives a K34 minor",
            "F4",
            CaseGenerator::DoubleSubdivideAndJoin,
            k34(),
        ),
        statement(
            "F4+T",
            "subdividing u1u2 with w3 and adding v ~ w1, w2, w3 for a path w1 u1 u2 w2 of F4 gives a K34 minor",
            "F4",
            CaseGenerator::TAttach,
            k34(),
        ),
        statement(
            "E22-split-pairs",
            "splitting two distinct eps2 vertices of E22 gives a K34 minor",
            "E22",
            custom("e22-split-pairs"),
            k34(),
        ),
        Statement {
            expected_cases: Some(1),
            reduce_by_isomorphism: true,
            ..statement(
                "E22-eps1-split-unique",
                "the split of E22 away from eps1_1 is unique up to symmetry and has two automorphisms",
                "E22",
                CaseGenerator::Splits { at: Some(vec![s("eps2_3")]) },
                Conclusion::SingleClass { aut_order: 2 },
            )
        },
        Statement {
            reduce_by_isomorphism: true,
            ..statement(
                "E22-no-eps2-split-conclusion",
                "with eps2_3 split, a path from the segments at eps1_1 to the rest of E22 gives a K34 minor",
                "E22",
                custom("e22-split-path"),
                k34(),
            )
        },
        Statement {
            expected_cases: Some(19),
            reduce_by_isomorphism: true,
            ..statement(
                "archdeacon-19",
                "every listed graph other than D17, E20, E22 and F4 has a K34 or Qplus minor",
                "K34",
                custom("a-list"),
                minors(&["K34", "Qplus"]),
            )
        },
        statement(
            "named-nonhamiltonian",
            "K34, Qplus and the Herschel graph are non-hamiltonian and bipartite of odd order",
            "K34",
            custom("named-nonhamiltonian"),
            Conclusion::NonHamiltonianBipartiteOdd,
        ),
        statement("lineK33-hamiltonian", "the line graph of K33 is hamiltonian", "LineK33", custom("line-k33"), Conclusion::Hamiltonian),
        Statement {
            reduce_by_isomorphism: true,
            ..statement(
                "seven-vertex-K34",
                "every 3-connected non-hamiltonian graph on at most 7 vertices has a K34 minor",
                "K34",
                custom("seven-vertex"),
                k34(),
            )
        },
    ]
}

fn plain(description: String, graph: Graph) -> Case {
    Case { description, graph, param: Param::Opaque, excluded: false }
}

pub(super) fn generate(suite: &Suite, st: &Statement) -> Generated {
    let base = suite.named(&st.base);
    let g = &base.graph;
    match &st.generator {
        CaseGenerator::Splits { at } => {
            let at = at.as_ref().map(|labels| labels.iter().map(|l| base.vertex(l)).collect::<VertexSet>());
            Generated::Cases(cases::splits(g, at))
        }
        CaseGenerator::EdgeAdditions { pairs } => {
            let p: Vec<_> = pairs.iter().map(|(a, b)| (base.vertex(a), base.vertex(b))).collect();
            Generated::Cases(cases::edge_additions(g, &p))
        }
        CaseGenerator::Apex { k, filter } => Generated::Cases(cases::apex(g, *k, *filter)),
        CaseGenerator::DoubleSubdivideAndJoin => Generated::Cases(cases::independent_edge_pairs(g)),
        CaseGenerator::TAttach => Generated::Cases(cases::t_attach(g)),
        CaseGenerator::EdgeSupersetsThenSplit => Generated::Classes(superset_split_classes(g)),
        CaseGenerator::Custom { name } => match name.as_str() {
            "e22-split-pairs" => Generated::Cases(e22_split_pairs(g)),
            "e22-split-path" => Generated::Cases(e22_split_paths(suite)),
            "a-list" => a_list_cases(suite),
            "named-nonhamiltonian" => Generated::Cases(
                ["K34", "Qplus", "Herschel"].iter().map(|n| plain(s(n), suite.graph(n).clone())).collect(),
            ),
            "line-k33" => Generated::Cases(vec![plain(s("LineK33"), suite.graph("LineK33").clone())]),
            "seven-vertex" => Generated::Cases(seven_vertex_cases()),
            other => Generated::Missing(format!("no generator named {other:?}")),
        },
    }
}

fn superset_split_classes(base: &Graph) -> Vec<(Case, usize)> {
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut out: Vec<(Case, usize)> = Vec::new();
    cases::for_each_superset_split(base, |added, spec, h| {
        let key = canonical_form(&h);
        if let Some(&i) = index.get(&key) {
            out[i].1 += 1;
            return;
        }
        index.insert(key, out.len());
        let mut named = base.clone();
        for &(u, v) in added {
            named = named.apply(&Edit::AddEdge { u, v }).unwrap();
        }
        let extra: Vec<String> = added.iter().map(|&e| edge_string(base, e)).collect();
        let description = format!("add [{}], {}", extra.join(", "), split_string(&named, spec));
        out.push((plain(description, named.split(spec).unwrap()), 1));
    });
    out
}

fn e22_split_pairs(g: &Graph) -> Vec<Case> {
    let eps2: Vec<usize> = (1..=4).map(|i| g.vertex_by_label(&format!("eps2_{i}")).unwrap()).collect();
    let mut out = Vec::new();
    for (i, &a) in eps2.iter().enumerate() {
        for &b in &eps2[i + 1..] {
            for sa in SplitSpec::all_for_vertex(g, a) {
                let ga = g.split(&sa).unwrap();
                for sb in SplitSpec::all_for_vertex(&ga, b) {
                    let desc = format!("{}; {}", split_string(g, &sa), split_string(&ga, &sb));
                    out.push(plain(desc, ga.split(&sb).unwrap()));
                }
            }
        }
    }
    out
}

/// With `eps2_j` split, join a point on the segments at `eps1_{j+2}` (the one
/// `eps1` vertex not adjacent to `eps2_j`) to a point of the rest of the
/// graph outside the split vertex. Points are branch vertices or new
/// vertices subdividing an edge.
fn e22_split_paths(suite: &Suite) -> Vec<Case> {
    let base = suite.named("E22");
    let g = &base.graph;
    let mut out = Vec::new();
    for j in 1..=4 {
        let hub = base.vertex(&format!("eps2_{j}"));
        let far = base.vertex(&format!("eps1_{}", (j + 1) % 4 + 1));
        debug_assert!(!g.has_edge(hub, far));
        for spec in SplitSpec::all_for_vertex(g, hub) {
            let h = g.split(&spec).unwrap();
            let twin = h.order() - 1;
            let halves: VertexSet = [hub, twin].into_iter().collect();
            let near: VertexSet = h.neighbors(far) | VertexSet::singleton(far);
            let far_edges: Vec<(usize, usize)> = h.neighbors(far).iter().map(|x| crate::graph::normalize_edge(far, x)).collect();
            let mut starts: Vec<Endpoint> = vec![Endpoint::Vertex(far)];
            starts.extend(far_edges.iter().map(|&e| Endpoint::Subdivide(e)));
            let mut ends: Vec<Endpoint> = (h.vertices() - near - halves).iter().map(Endpoint::Vertex).collect();
            ends.extend(
                h.edges()
                    .filter(|e| !far_edges.contains(e) && !(halves.contains(e.0) && halves.contains(e.1)))
                    .map(Endpoint::Subdivide),
            );
            for a in &starts {
                for b in &ends {
                    let (graph, desc) = join(&h, *a, *b);
                    out.push(plain(format!("{}; {desc}", split_string(g, &spec)), graph));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
enum Endpoint {
    Vertex(usize),
    Subdivide((usize, usize)),
}

fn join(h: &Graph, a: Endpoint, b: Endpoint) -> (Graph, String) {
    let mut g = h.clone();
    let place = |g: &mut Graph, p: Endpoint| match p {
        Endpoint::Vertex(v) => (v, g.display_vertex(v)),
        Endpoint::Subdivide((u, v)) => {
            let desc = format!("a point inside {}", edge_string(g, (u, v)));
            *g = g.apply(&Edit::SubdivideEdge { u, v }).unwrap();
            (g.order() - 1, desc)
        }
    };
    let (x, da) = place(&mut g, a);
    let (y, db) = place(&mut g, b);
    g = g.apply(&Edit::AddEdge { u: x, v: y }).unwrap();
    (g, format!("join {da} to {db}"))
}

fn a_list_cases(suite: &Suite) -> Generated {
    let Some(list) = &suite.a_list else {
        return Generated::Missing(format!(
            "no obstruction list loaded; set {} to a collection file to run this statement",
            super::ALIST_ENV
        ));
    };
    let skip: Vec<&Graph> = ["D17", "E20", "E22", "F4"].iter().map(|n| suite.graph(n)).collect();
    Generated::Cases(
        list.iter()
            .filter(|ng| !skip.iter().any(|k| are_isomorphic(k, &ng.graph)))
            .map(|ng| plain(ng.name.clone(), ng.graph.clone()))
            .collect(),
    )
}

/// Every connected graph on at most 7 vertices.
pub(crate) fn small_corpus() -> Vec<Graph> {
    parse_graph6_stream(SMALL_CONNECTED).expect("bundled corpus parses")
}

fn seven_vertex_cases() -> Vec<Case> {
    small_corpus()
        .into_iter()
        .filter(|g| g.order() <= 7 && is_k_connected(g, 3) && is_hamiltonian(g).is_none())
        .map(|g| plain(format!("{} ({} vertices)", crate::io::to_graph6(&g), g.order()), g))
        .collect()
}
