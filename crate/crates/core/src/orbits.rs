//! Orbits of automorphism groups acting on derived objects (vertex sets,
//! edges, split specifications, ...).

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::canon::{automorphism_group, Perm};
use crate::graph::{normalize_edge, Edge, Graph, SplitSpec, VertexSet};

/// How a vertex permutation moves an object.
pub trait Action<T> {
    fn act(&self, perm: &Perm, item: &T) -> T;
}

pub struct SetAction;

impl Action<VertexSet> for SetAction {
    fn act(&self, perm: &Perm, s: &VertexSet) -> VertexSet {
        s.map(perm)
    }
}

pub struct EdgeAction;

impl Action<Edge> for EdgeAction {
    fn act(&self, perm: &Perm, &(u, v): &Edge) -> Edge {
        normalize_edge(perm[u], perm[v])
    }
}

pub struct SplitAction;

impl Action<SplitSpec> for SplitAction {
    fn act(&self, perm: &Perm, s: &SplitSpec) -> SplitSpec {
        s.map(perm)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    pub representative: T,
    pub size: usize,
}

/// Partitions `items` into orbits under the given generators. Items outside
/// `items` reached by the action are ignored, so `items` should be closed.
/// Representatives are the first member of each orbit in input order.
pub fn orbits_under<T, A>(gens: &[Perm], items: &[T], action: &A) -> Vec<Orbit<T>>
where
    T: Clone + Eq + Hash,
    A: Action<T>,
{
    let index: HashMap<&T, usize> = items.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut out = Vec::new();
    for (i, item) in items.iter().enumerate() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let mut size = 1;
        let mut queue = VecDeque::from([item.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = action.act(g, &x);
                if let Some(&j) = index.get(&y) {
                    if !seen[j] {
                        seen[j] = true;
                        size += 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        out.push(Orbit { representative: item.clone(), size });
    }
    out
}

/// Orbits of `items` under the full automorphism group of `g`.
pub fn orbit_representatives<T, A>(g: &Graph, items: &[T], action: &A) -> Vec<Orbit<T>>
where
    T: Clone + Eq + Hash,
    A: Action<T>,
{
    orbits_under(&automorphism_group(g).generators, items, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::group_elements;

    #[test]
    fn petersen_edges_form_one_orbit() {
        let p = crate::io::from_graph6("IheA@GUAo").unwrap();
        let edges: Vec<Edge> = p.edges().collect();
        let o = orbit_representatives(&p, &edges, &EdgeAction);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].size, 15);
    }

    #[test]
    fn orbit_sizes_match_full_group_enumeration() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        let mut pairs = Vec::new();
        crate::connectivity::any_subset(g.vertices(), 2, &mut |s| {
            pairs.push(s);
            false
        });
        let gens = automorphism_group(&g).generators;
        let elems = group_elements(g.order(), &gens);
        for o in orbits_under(&gens, &pairs, &SetAction) {
            let mut images: Vec<u64> = elems.iter().map(|p| o.representative.map(p).bits()).collect();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), o.size);
        }
    }

    #[test]
    fn k4_splits_of_k5_are_one_orbit() {
        let k5 = Graph::complete(5).unwrap();
        let specs = SplitSpec::all(&k5);
        let o = orbit_representatives(&k5, &specs, &SplitAction);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].size, specs.len());
    }
}
