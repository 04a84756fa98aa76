//! Minor and topological-minor containment, one-step minors, and the
//! obstruction test for minor-closed classes.

mod embedding;
mod search;
mod topological;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::graph::Graph;
use crate::recognition::ClassPredicate;

pub use embedding::{EmbeddingError, MinorEmbedding, TopologicalEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("class `{0}` is not flagged as minor-closed")]
    NotMinorClosed(String),
}

/// Returns a branch-set model witnessing `pattern <= host`, or `None`.
pub fn contains_minor(host: &Graph, pattern: &Graph) -> Option<MinorEmbedding> {
    let found = search::find_minor(host, pattern)?;
    if let Err(e) = found.validate(host, pattern) {
        panic!(
            "minor search produced an invalid embedding ({e}): host {host:?}, pattern {pattern:?}"
        );
    }
    Some(found)
}

/// Tries `patterns` in ascending (vertex count, edge count) order, stable on
/// ties, and reports the index of the first one found.
pub fn contains_any_minor(host: &Graph, patterns: &[Graph]) -> Option<(usize, MinorEmbedding)> {
    let mut idx: Vec<usize> = (0..patterns.len()).collect();
    idx.sort_by_key(|&i| (patterns[i].vertex_count(), patterns[i].edge_count()));
    idx.into_iter()
        .find_map(|i| contains_minor(host, &patterns[i]).map(|e| (i, e)))
}

/// Returns a subdivision of `pattern` inside `host`, or `None`. Intended for
/// patterns of at most eight vertices.
pub fn contains_topological_minor(host: &Graph, pattern: &Graph) -> Option<TopologicalEmbedding> {
    let found = topological::find_topological_minor(host, pattern)?;
    if let Err(e) = found.validate(host, pattern) {
        panic!("topological search produced an invalid embedding ({e})");
    }
    Some(found)
}

/// Every graph obtained by one edge deletion, one edge contraction, or
/// deleting one isolated vertex. Not deduplicated.
pub fn one_step_minor_graphs(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let edge_minors = g.edges().flat_map(move |(u, v)| {
        let mut deleted = g.clone();
        deleted.clear_edge(u, v);
        [deleted, g.contract_unchecked(u, v)]
    });
    let isolated = (0..g.vertex_count())
        .filter(move |&v| g.neighbor_mask(v) == 0)
        .map(move |v| g.delete_vertex_unchecked(v));
    edge_minors.chain(isolated)
}

/// Isomorphism classes of the one-step minors of `g`.
pub fn one_step_minors(g: &Graph) -> Result<BTreeSet<CanonicalForm>, CanonError> {
    one_step_minor_graphs(g)
        .map(|h| canonical_form(&h))
        .collect()
}

/// `g` is not in `class` but every one-step minor is. Since every proper
/// minor is reached through a one-step minor, this is minor-minimality.
pub fn is_obstruction(g: &Graph, class: &ClassPredicate) -> Result<bool, MinorError> {
    if !class.is_minor_closed() {
        return Err(MinorError::NotMinorClosed(class.name().to_string()));
    }
    Ok(!class.test(g) && one_step_minor_graphs(g).all(|h| class.test(&h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn reflexive() {
        for g in [
            Graph::wheel(5).unwrap(),
            Graph::butterfly(),
            Graph::empty(3).unwrap(),
        ] {
            let e = contains_minor(&g, &g).expect("every graph is a minor of itself");
            e.validate(&g, &g).unwrap();
        }
    }

    #[test]
    fn wheel_contains_k4() {
        let w5 = Graph::wheel(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert!(contains_minor(&w5, &k4).is_some());
        assert!(contains_minor(&k4, &w5).is_none());
    }

    #[test]
    fn trees_exclude_the_diamond() {
        let star = Graph::complete_bipartite(1, 7).unwrap();
        let path = Graph::path(8).unwrap();
        for t in [star, path] {
            assert!(contains_minor(&t, &Graph::diamond()).is_none());
        }
    }

    #[test]
    fn any_minor_picks_smallest_pattern() {
        let patterns = [Graph::butterfly(), Graph::diamond()];
        let (i, _) = contains_any_minor(&Graph::complete(5).unwrap(), &patterns).unwrap();
        assert_eq!(i, 1);
        assert!(contains_any_minor(&Graph::cycle(7).unwrap(), &patterns).is_none());
    }

    #[test]
    fn topological_examples() {
        let c3 = Graph::complete(3).unwrap();
        assert!(contains_topological_minor(&Graph::cycle(6).unwrap(), &c3).is_some());
        // K4 with every edge subdivided once
        let mut sub = Graph::empty(10).unwrap();
        for (next, (u, v)) in (4..).zip(Graph::complete(4).unwrap().edges()) {
            sub.set_edge(u, next);
            sub.set_edge(next, v);
        }
        let k4 = Graph::complete(4).unwrap();
        let t = contains_topological_minor(&sub, &k4).unwrap();
        assert_eq!(t.validate(&sub, &k4), Ok(()));
        // K_{1,3} is a minor of a cubic-free graph only if some degree-3 vertex exists
        let claw = Graph::complete_bipartite(1, 3).unwrap();
        assert!(contains_topological_minor(&Graph::cycle(8).unwrap(), &claw).is_none());
    }

    #[test]
    fn one_step_minor_examples() {
        let k3 = Graph::complete(3).unwrap();
        let m = one_step_minors(&k3).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.contains(&canonical_form(&Graph::path(3).unwrap()).unwrap()));
        assert!(m.contains(&canonical_form(&Graph::complete(2).unwrap()).unwrap()));

        let single = one_step_minors(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(
            single.into_iter().collect::<Vec<_>>(),
            vec![canonical_form(&Graph::empty(0).unwrap()).unwrap()]
        );

        let c5 = one_step_minors(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.len(), 2);
    }

    #[test]
    fn obstruction_examples() {
        let pf = ClassPredicate::pseudoforest();
        assert_eq!(is_obstruction(&Graph::diamond(), &pf), Ok(true));
        assert_eq!(is_obstruction(&Graph::butterfly(), &pf), Ok(true));
        assert_eq!(is_obstruction(&Graph::complete(4).unwrap(), &pf), Ok(false));
        assert_eq!(is_obstruction(&Graph::cycle(4).unwrap(), &pf), Ok(false));
        let unflagged = ClassPredicate::new("odd", false, |g| g.vertex_count() % 2 == 1);
        assert!(matches!(
            is_obstruction(&Graph::diamond(), &unflagged),
            Err(MinorError::NotMinorClosed(_))
        ));
    }
}
