use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, graph_from_key, CanonicalForm};
use crate::decomposition::has_bridge;
use crate::graph::Graph;
use crate::minors::{contains_any_minor, is_obstruction, one_step_minor_graphs};
use crate::recognition::{is_k_apex, ClassPredicate};

use super::enumerate::{extend_keys, MAX_ENUMERATION_VERTICES};
use super::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Tests every candidate.
    #[default]
    Exhaustive,
    /// Connected search only: skips candidates with a vertex of degree
    /// below two or with a bridge.
    Pruned,
}

/// Every graph with at most `max_n` vertices (connected ones if
/// `connected_only`) that is an obstruction for `cls`.
///
/// Level `n` is generated from the members of `cls` at level `n - 1`: deleting
/// any vertex of an obstruction (a non-cut vertex, for connected search)
/// leaves a member, so no obstruction is missed.
pub fn search_obstructions(
    cls: &ClassPredicate,
    max_n: usize,
    connected_only: bool,
    mode: SearchMode,
) -> Result<BTreeSet<CanonicalForm>, VerifyError> {
    if !cls.is_minor_closed() {
        return Err(VerifyError::NotMinorClosed(cls.name().to_string()));
    }
    if max_n > MAX_ENUMERATION_VERTICES {
        return Err(VerifyError::BadSize {
            n: max_n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut found = BTreeSet::new();
    if max_n == 0 {
        return Ok(found);
    }
    let empty = Graph::empty(0).expect("empty graph");
    if !cls.test(&empty) {
        if !connected_only {
            found.insert(CanonicalForm::from_key(0, 0));
        }
        return Ok(found);
    }
    let mut members: Vec<u128> = Vec::new();
    let mut candidates: Vec<u128> = vec![0];
    for n in 1..=max_n {
        if n > 1 {
            candidates = extend_keys(n - 1, &members, connected_only);
        }
        let classified: Vec<(u128, bool, bool)> = candidates
            .par_iter()
            .map(|&k| {
                let g = graph_from_key(n, k);
                if cls.test(&g) {
                    return (k, true, false);
                }
                let skip = mode == SearchMode::Pruned
                    && connected_only
                    && (g.min_degree() < 2 || has_bridge(&g));
                let obs = !skip && is_obstruction(&g, cls).expect("class checked above");
                (k, false, obs)
            })
            .collect();
        members = classified.iter().filter(|c| c.1).map(|c| c.0).collect();
        found.extend(
            classified
                .iter()
                .filter(|c| c.2)
                .map(|c| CanonicalForm::from_key(n, c.0)),
        );
    }
    Ok(found)
}

/// Deduplicated obstructions of `cls` among the given graphs.
pub fn obstructions_among(
    graphs: &[Graph],
    cls: &ClassPredicate,
) -> Result<BTreeSet<CanonicalForm>, VerifyError> {
    if !cls.is_minor_closed() {
        return Err(VerifyError::NotMinorClosed(cls.name().to_string()));
    }
    let hits: Vec<Option<CanonicalForm>> = graphs
        .par_iter()
        .map(|g| -> Result<Option<CanonicalForm>, VerifyError> {
            if is_obstruction(g, cls).expect("class checked above") {
                Ok(Some(canonical_form(g)?))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Minimality re-checked from scratch over every minor reachable in at most
/// two steps of vertex deletion, edge deletion or edge contraction.
pub fn is_obstruction_two_step(g: &Graph, cls: &ClassPredicate) -> bool {
    if cls.test(g) {
        return false;
    }
    let step = |h: &Graph| -> Vec<Graph> {
        let mut out: Vec<Graph> = one_step_minor_graphs(h).collect();
        out.extend((0..h.vertex_count()).map(|v| h.delete_vertex(v).expect("vertex in range")));
        out
    };
    let mut seen: HashSet<Graph> = HashSet::new();
    for h in step(g) {
        if !cls.test(&h) {
            return false;
        }
        for h2 in step(&h) {
            if seen.insert(h2.clone()) && !cls.test(&h2) {
                return false;
            }
        }
    }
    true
}

/// Graphs with none of `obstructions` as a minor.
pub fn excluding(name: &str, obstructions: &[Graph]) -> ClassPredicate {
    let obs = obstructions.to_vec();
    ClassPredicate::new(name, true, move |g| contains_any_minor(g, &obs).is_none())
}

/// Disjoint unions of `k + 1` graphs from `base_obs` (with repetition) that
/// are obstructions for the `k`-apex extension of the class excluding
/// `base_obs`. These are the compositions in which every part is a base
/// obstruction.
pub fn compose_disconnected(
    base_obs: &[Graph],
    k: usize,
) -> Result<BTreeSet<CanonicalForm>, VerifyError> {
    let base = excluding("base", base_obs);
    let cls = ClassPredicate::new(format!("{k}-apex(base)"), true, move |g| {
        is_k_apex(g, &base, k)
    });
    compose_disconnected_for(base_obs, k, &cls)
}

/// As [`compose_disconnected`], filtering against an explicitly given class.
pub fn compose_disconnected_for(
    base_obs: &[Graph],
    k: usize,
    cls: &ClassPredicate,
) -> Result<BTreeSet<CanonicalForm>, VerifyError> {
    if k == 0 || base_obs.is_empty() {
        return Ok(BTreeSet::new());
    }
    let mut candidates = Vec::new();
    let mut pick = vec![0usize; k + 1];
    loop {
        let mut g = base_obs[pick[0]].clone();
        for &i in &pick[1..] {
            g = g.disjoint_union(&base_obs[i])?;
        }
        candidates.push(g);
        // next non-decreasing index tuple
        let Some(pos) = (0..=k).rev().find(|&p| pick[p] + 1 < base_obs.len()) else {
            break;
        };
        let v = pick[pos] + 1;
        for p in &mut pick[pos..] {
            *p = v;
        }
    }
    obstructions_among(&candidates, cls)
}
