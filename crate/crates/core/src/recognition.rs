//! Membership tests for pseudoforests, apex-pseudoforests and k-apex
//! extensions of arbitrary classes.

use std::fmt;
use std::sync::Arc;

use crate::graph::{Bits, Graph, VertexId};

/// A named graph class given by a membership test.
///
/// `is_minor_closed` is asserted by whoever builds the predicate; obstruction
/// routines refuse predicates without it.
#[derive(Clone)]
pub struct ClassPredicate {
    name: String,
    test: Arc<dyn Fn(&Graph) -> bool + Send + Sync>,
    is_minor_closed: bool,
}

impl ClassPredicate {
    pub fn new<F>(name: impl Into<String>, is_minor_closed: bool, test: F) -> Self
    where
        F: Fn(&Graph) -> bool + Send + Sync + 'static,
    {
        ClassPredicate {
            name: name.into(),
            test: Arc::new(test),
            is_minor_closed,
        }
    }

    pub fn pseudoforest() -> Self {
        ClassPredicate::new("pseudoforest", true, is_pseudoforest)
    }

    pub fn apex_pseudoforest() -> Self {
        ClassPredicate::new("apex-pseudoforest", true, is_apex_pseudoforest)
    }

    /// Every graph; has no obstructions.
    pub fn all_graphs() -> Self {
        ClassPredicate::new("all-graphs", true, |_| true)
    }

    /// Graphs that land in `base` after deleting at most `k` vertices.
    pub fn k_apex(base: ClassPredicate, k: usize) -> Self {
        let name = format!("{k}-apex({})", base.name);
        let closed = base.is_minor_closed;
        ClassPredicate::new(name, closed, move |g| is_k_apex(g, &base, k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_minor_closed(&self) -> bool {
        self.is_minor_closed
    }

    #[inline]
    pub fn test(&self, g: &Graph) -> bool {
        (self.test)(g)
    }
}

impl fmt::Debug for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassPredicate")
            .field("name", &self.name)
            .field("is_minor_closed", &self.is_minor_closed)
            .finish()
    }
}

/// Every component of the subgraph induced by `within` has at most as many
/// edges as vertices.
pub(crate) fn is_pseudoforest_within(g: &Graph, within: u64) -> bool {
    let mut rest = within & g.vertex_mask();
    while rest != 0 {
        let c = g.component_mask_within(rest.trailing_zeros() as usize, rest);
        if g.edge_count_within(c) > c.count_ones() as usize {
            return false;
        }
        rest &= !c;
    }
    true
}

pub fn is_pseudoforest(g: &Graph) -> bool {
    // |E| > |V| forces some component over budget
    g.edge_count() <= g.vertex_count() && is_pseudoforest_within(g, g.vertex_mask())
}

/// Smallest vertex whose deletion leaves a pseudoforest.
///
/// `None` means no such vertex; in particular the graph with no vertices
/// (which is a pseudoforest) has no apex vertex.
pub fn apex_vertex(g: &Graph) -> Option<VertexId> {
    let all = g.vertex_mask();
    let m = g.edge_count();
    let n = g.vertex_count();
    (0..n).find(|&v| {
        let rest = m - g.neighbor_mask(v).count_ones() as usize;
        rest < n && is_pseudoforest_within(g, all & !(1 << v))
    })
}

pub fn is_apex_pseudoforest(g: &Graph) -> bool {
    g.vertex_count() == 0 || apex_vertex(g).is_some()
}

/// Whether deleting some set of at most `k` vertices yields a member of
/// `base`. Exhaustive over subsets in order of increasing size.
pub fn is_k_apex(g: &Graph, base: &ClassPredicate, k: usize) -> bool {
    k_apex_witness(g, base, k).is_some()
}

/// The first deletion set (smallest size, then lexicographic by bitmask)
/// that lands in `base`.
pub fn k_apex_witness(g: &Graph, base: &ClassPredicate, k: usize) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    for size in 0..=k.min(n) {
        let mut found = None;
        for_each_subset(n, size, &mut |mask| {
            if base.test(&g.delete_vertex_mask(mask)) {
                found = Some(Bits(mask).collect());
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Calls `f` on every `size`-subset of `0..n` in colex order until it
/// returns `true`.
pub(crate) fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
    if size > n {
        return false;
    }
    if size == 0 {
        return f(0);
    }
    let mut mask: u64 = (1u64 << size) - 1;
    let limit = 1u64 << n;
    while mask < limit {
        if f(mask) {
            return true;
        }
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    false
}
