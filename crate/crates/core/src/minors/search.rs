//! Backtracking search for branch-set models.
//!
//! Pattern vertices are placed one at a time. Each is given a connected set
//! of still-free host vertices, grown from a root and enumerated so every
//! connected set is produced exactly once. A candidate set must touch the
//! sets of all already-placed pattern neighbours, must leave room for the
//! remaining pattern vertices, and must have enough free neighbours for the
//! pattern neighbours that are still unplaced.

use crate::graph::{Bits, Graph, VertexId};

use super::embedding::MinorEmbedding;

/// Degrees capped at 3, sorted non-increasing. Each pattern vertex of capped
/// degree `d` needs its own host vertex of capped degree at least `d`.
fn capped_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.deg(v).min(3)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Cheap necessary conditions for `pattern <= host`.
pub(crate) fn passes_filters(host: &Graph, pattern: &Graph) -> bool {
    let (hn, pn) = (host.vertex_count(), pattern.vertex_count());
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let hd = capped_degrees(host);
    let pd = capped_degrees(pattern);
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return false;
    }
    // every pattern component must fit inside a single host component
    let host_parts: Vec<(usize, usize)> = host
        .component_masks()
        .into_iter()
        .map(|c| (c.count_ones() as usize, host.edge_count_within(c)))
        .collect();
    pattern.component_masks().into_iter().all(|c| {
        let (cn, cm) = (c.count_ones() as usize, pattern.edge_count_within(c));
        host_parts.iter().any(|&(n, m)| n >= cn && m >= cm)
    })
}

/// Placement order: pattern components by decreasing size; inside a
/// component start at a maximum-degree vertex, then always take the
/// unplaced vertex with the most placed neighbours (ties: higher degree,
/// then lower id).
fn placement_order(pattern: &Graph) -> Vec<VertexId> {
    let mut comps = pattern.component_masks();
    comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
    let mut order = Vec::with_capacity(pattern.vertex_count());
    for comp in comps {
        let mut placed = 0u64;
        let first = Bits(comp)
            .max_by_key(|&v| (pattern.deg(v), std::cmp::Reverse(v)))
            .expect("components are nonempty");
        order.push(first);
        placed |= 1 << first;
        while placed != comp {
            let next = Bits(comp & !placed)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbor_mask(v) & placed).count_ones(),
                        pattern.deg(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("component has unplaced vertices");
            order.push(next);
            placed |= 1 << next;
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<VertexId>,
    sets: Vec<u64>,
    placed: u64,
}

impl<'a> Search<'a> {
    fn neighborhood(&self, set: u64) -> u64 {
        Bits(set).fold(0u64, |acc, v| acc | self.host.neighbor_mask(v)) & !set
    }

    /// Every unplaced pattern vertex with placed neighbours must still be
    /// able to sit in one free host component touching all of their sets.
    fn lookahead_ok(&self, free: u64) -> bool {
        let comps = self.host.component_masks_within(free);
        for c in Bits(self.pattern.vertex_mask() & !self.placed) {
            let placed_nbrs = self.pattern.neighbor_mask(c) & self.placed;
            if placed_nbrs == 0 {
                continue;
            }
            let touches: Vec<u64> = Bits(placed_nbrs)
                .map(|b| self.neighborhood(self.sets[b]))
                .collect();
            let ok = comps.iter().any(|&k| touches.iter().all(|&t| t & k != 0));
            if !ok {
                return false;
            }
        }
        true
    }

    fn place(&mut self, step: usize, used: u64) -> bool {
        if step == self.order.len() {
            return true;
        }
        let a = self.order[step];
        let free = self.host.vertex_mask() & !used;
        let remaining_after = self.order.len() - step - 1;
        let budget = (free.count_ones() as usize).saturating_sub(remaining_after);
        if budget == 0 {
            return false;
        }

        let placed_nbrs = self.pattern.neighbor_mask(a) & self.placed;
        let unplaced_nbrs = (self.pattern.neighbor_mask(a) & !self.placed).count_ones();
        let must_touch: Vec<u64> = Bits(placed_nbrs)
            .map(|b| self.neighborhood(self.sets[b]))
            .collect();

        // Roots: for a vertex with placed neighbours, the set must meet the
        // tightest neighbourhood; otherwise any free vertex.
        let roots = match must_touch.iter().min_by_key(|m| (*m & free).count_ones()) {
            Some(&m) => m & free,
            None => free,
        };

        let mut excluded = 0u64;
        for r in Bits(roots) {
            let start = 1u64 << r;
            if self.grow(
                step,
                a,
                used,
                free,
                start,
                excluded,
                budget,
                &must_touch,
                unplaced_nbrs,
            ) {
                return true;
            }
            excluded |= start;
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        step: usize,
        a: VertexId,
        used: u64,
        free: u64,
        set: u64,
        excluded: u64,
        budget: usize,
        must_touch: &[u64],
        unplaced_nbrs: u32,
    ) -> bool {
        match self.try_set(step, a, used, free, set, must_touch, unplaced_nbrs) {
            Some(true) => return true,
            // Nobody placed later needs to touch this set, so a superset
            // cannot do better than the set that just failed.
            Some(false) if unplaced_nbrs == 0 => return false,
            _ => {}
        }
        if set.count_ones() as usize >= budget {
            return false;
        }
        let cand = self.neighborhood(set) & free & !excluded;
        let mut ex = excluded;
        for v in Bits(cand) {
            if self.grow(
                step,
                a,
                used,
                free,
                set | 1 << v,
                ex,
                budget,
                must_touch,
                unplaced_nbrs,
            ) {
                return true;
            }
            ex |= 1 << v;
        }
        false
    }

    /// `None` if `set` violates a local constraint, otherwise whether the
    /// rest of the placement succeeded with it.
    #[allow(clippy::too_many_arguments)]
    fn try_set(
        &mut self,
        step: usize,
        a: VertexId,
        used: u64,
        free: u64,
        set: u64,
        must_touch: &[u64],
        unplaced_nbrs: u32,
    ) -> Option<bool> {
        if must_touch.iter().any(|&m| m & set == 0) {
            return None;
        }
        let rest = free & !set;
        if (self.neighborhood(set) & rest).count_ones() < unplaced_nbrs {
            return None;
        }
        self.sets[a] = set;
        self.placed |= 1 << a;
        let ok = self.lookahead_ok(rest) && self.place(step + 1, used | set);
        if !ok {
            self.placed &= !(1 << a);
            self.sets[a] = 0;
        }
        Some(ok)
    }
}

/// Finds a branch-set model of `pattern` in `host`, if one exists.
pub(crate) fn find_minor(host: &Graph, pattern: &Graph) -> Option<MinorEmbedding> {
    if pattern.vertex_count() == 0 {
        return Some(MinorEmbedding::from_masks(Vec::new()));
    }
    if !passes_filters(host, pattern) {
        return None;
    }
    let mut s = Search {
        host,
        pattern,
        order: placement_order(pattern),
        sets: vec![0; pattern.vertex_count()],
        placed: 0,
    };
    s.place(0, 0).then(|| MinorEmbedding::from_masks(s.sets))
}
