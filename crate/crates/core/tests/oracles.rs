mod common;

use std::collections::{BTreeSet, HashMap};

use apexforest::canon::{canonical_form, CanonicalForm};
use apexforest::decomposition::{
    augmented_components, is_triconnected, minimum_small_separators, split,
    triconnected_components, vertex_connectivity, SeparatorSet,
};
use apexforest::graph::Graph;
use apexforest::minors::{contains_minor, one_step_minor_graphs};
use apexforest::recognition::{is_apex_pseudoforest, is_pseudoforest};
use apexforest::verify::enumerate_graphs;

use common::*;

fn all_up_to(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(0).unwrap()];
    for k in 1..=n {
        out.extend(enumerate_graphs(k, false).unwrap());
    }
    out
}

fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn minor_search_matches_all_maps_oracle() {
    let hosts = all_up_to(5);
    let patterns = all_up_to(5);
    for g in &hosts {
        for h in &patterns {
            let found = contains_minor(g, h);
            assert_eq!(
                found.is_some(),
                minor_by_all_maps(g, h),
                "host {g:?} pattern {h:?}"
            );
        }
    }
}

/// Every minor of `g`, computed by closing under single operations.
fn closure(
    g: &Graph,
    memo: &mut HashMap<CanonicalForm, BTreeSet<CanonicalForm>>,
) -> BTreeSet<CanonicalForm> {
    let key = canonical_form(g).unwrap();
    if let Some(s) = memo.get(&key) {
        return s.clone();
    }
    let mut set = BTreeSet::from([key.clone()]);
    let mut next: Vec<Graph> = one_step_minor_graphs(g).collect();
    next.extend((0..g.vertex_count()).map(|v| g.delete_vertex(v).unwrap()));
    for h in next {
        set.extend(closure(&h, memo));
    }
    memo.insert(key, set.clone());
    set
}

#[test]
fn minor_search_matches_closure_table() {
    let mut memo = HashMap::new();
    let patterns = all_up_to(5);
    for g in all_up_to(7) {
        let minors = closure(&g, &mut memo);
        for h in &patterns {
            let expected = minors.contains(&canonical_form(h).unwrap());
            assert_eq!(
                contains_minor(&g, h).is_some(),
                expected,
                "host {g:?} pattern {h:?}"
            );
        }
    }
}

#[test]
fn canonical_forms_match_permutation_oracle() {
    for n in 0..=5 {
        let reps = if n == 0 {
            vec![Graph::empty(0).unwrap()]
        } else {
            enumerate_graphs(n, false).unwrap()
        };
        let rep_forms: Vec<CanonicalForm> =
            reps.iter().map(|r| canonical_form(r).unwrap()).collect();
        for g in all_labeled(n) {
            let matching: Vec<usize> = (0..reps.len())
                .filter(|&i| isomorphic_by_permutations(&g, &reps[i]))
                .collect();
            assert_eq!(matching.len(), 1, "{g:?}");
            assert_eq!(canonical_form(&g).unwrap(), rep_forms[matching[0]]);
        }
    }
}

#[test]
fn census_up_to_seven_is_isomorph_free() {
    // distinct classes at each level, checked pairwise by bijection search
    for n in 1..=5 {
        let gs = enumerate_graphs(n, false).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!isomorphic_by_permutations(a, b));
            }
        }
    }
    assert_eq!(enumerate_graphs(7, false).unwrap().len(), 1044);
    assert_eq!(enumerate_graphs(7, true).unwrap().len(), 853);
}

#[test]
fn connectivity_matches_subset_oracle() {
    for g in all_up_to(7) {
        assert_eq!(
            vertex_connectivity(&g),
            connectivity_by_subsets(&g),
            "{g:?}"
        );
        assert_eq!(
            is_triconnected(&g),
            g.vertex_count() >= 4 && connectivity_by_subsets(&g) >= 3
        );
    }
}

#[test]
fn recognition_matches_oracles() {
    let obs = [Graph::diamond(), Graph::butterfly()];
    for g in all_up_to(7) {
        let pf = is_pseudoforest_by_components(&g);
        assert_eq!(is_pseudoforest(&g), pf, "{g:?}");
        let apex = g.vertex_count() == 0
            || (0..g.vertex_count())
                .any(|v| is_pseudoforest_by_components(&g.delete_vertex(v).unwrap()));
        assert_eq!(is_apex_pseudoforest(&g), apex, "{g:?}");
        let excluded = obs.iter().all(|h| !minor_by_all_maps_or_search(&g, h));
        assert_eq!(pf, excluded, "{g:?}");
    }
}

fn minor_by_all_maps_or_search(g: &Graph, h: &Graph) -> bool {
    // the all-maps oracle gets slow past six host vertices
    if g.vertex_count() <= 6 {
        minor_by_all_maps(g, h)
    } else {
        contains_minor(g, h).is_some()
    }
}

#[test]
fn contraction_by_adjacency_construction() {
    for g in all_up_to(6) {
        let a = matrix(&g);
        for (x, y) in g.edges() {
            let c = g.contract_edge(x, y).unwrap();
            // old id of each surviving vertex
            let old: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != y).collect();
            for i in 0..old.len() {
                for j in 0..old.len() {
                    if i == j {
                        continue;
                    }
                    let (u, w) = (old[i], old[j]);
                    let adj = if u == x || w == x {
                        let other = if u == x { w } else { u };
                        a[x][other] || a[y][other]
                    } else {
                        a[u][w]
                    };
                    assert_eq!(c.has_edge(i, j), adj);
                }
            }
        }
    }
}

#[test]
fn split_then_contract_is_identity() {
    for g in all_up_to(6) {
        for v in 0..g.vertex_count() {
            let nbrs = g.neighbors(v).unwrap();
            if nbrs.len() < 4 {
                continue;
            }
            for mask in 0u32..1 << nbrs.len() {
                let (a, b): (Vec<usize>, Vec<usize>) =
                    nbrs.iter()
                        .enumerate()
                        .fold((vec![], vec![]), |(mut a, mut b), (i, &x)| {
                            if mask >> i & 1 == 1 {
                                a.push(x)
                            } else {
                                b.push(x)
                            }
                            (a, b)
                        });
                if a.len() < 2 || b.len() < 2 {
                    assert!(split(&g, v, &a, &b).is_err());
                    continue;
                }
                let s = split(&g, v, &a, &b).unwrap();
                assert_eq!(s.vertex_count(), g.vertex_count() + 1);
                assert_eq!(s.contract_edge(v, g.vertex_count()).unwrap(), g);
            }
        }
    }
}

/// Every multiset of members reachable by some sequence of minimum-size
/// separator choices.
fn all_decompositions(g: &Graph) -> BTreeSet<Vec<CanonicalForm>> {
    let n = g.vertex_count();
    let clique = n <= 3 && g.edge_count() == n * n.saturating_sub(1) / 2;
    if clique || is_triconnected(g) {
        return BTreeSet::from([vec![canonical_form(g).unwrap()]]);
    }
    let mut out = BTreeSet::new();
    let options: Vec<Vec<Graph>> = if !g.is_connected() {
        vec![g
            .components()
            .iter()
            .map(|c| g.induced(c).unwrap())
            .collect()]
    } else {
        minimum_small_separators(g)
            .iter()
            .map(|s| augmented_components(g, &SeparatorSet::new(g, s).unwrap()).unwrap())
            .collect()
    };
    for parts in options {
        let mut acc: BTreeSet<Vec<CanonicalForm>> = BTreeSet::from([Vec::new()]);
        for p in &parts {
            let sub = all_decompositions(p);
            acc = acc
                .iter()
                .flat_map(|a| {
                    sub.iter().map(move |s| {
                        let mut v = a.clone();
                        v.extend(s.iter().cloned());
                        v.sort();
                        v
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

#[test]
fn triconnected_components_do_not_depend_on_separator_choice() {
    for g in all_up_to(7) {
        let all = all_decompositions(&g);
        assert_eq!(
            all.len(),
            1,
            "separator choice changes Q for {g:?}: {all:?}"
        );
        let q = triconnected_components(&g);
        q.replay(&g).unwrap();
        let mut got: Vec<CanonicalForm> = q
            .members
            .iter()
            .map(|m| canonical_form(m).unwrap())
            .collect();
        got.sort();
        assert_eq!(&got, all.iter().next().unwrap());
    }
}

#[test]
fn non_minimum_separators_can_change_the_result() {
    // on the path 0-1-2-3, splitting at {0, 2} yields a triangle
    let p4 = Graph::path(4).unwrap();
    let s = SeparatorSet::new(&p4, &[0, 2]).unwrap();
    let parts = augmented_components(&p4, &s).unwrap();
    assert!(parts.contains(&Graph::complete(3).unwrap()));
    let q = triconnected_components(&p4);
    assert!(q.members.iter().all(|m| m == &Graph::complete(2).unwrap()));
}
