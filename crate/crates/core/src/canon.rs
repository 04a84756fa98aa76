//! Canonical forms and isomorphism testing for small graphs.
//!
//! The canonical form of a graph is the graph6 string of the relabelling
//! whose upper-triangle adjacency bit string (in graph6 order) is smallest
//! among the leaves of an individualization-refinement search tree. The tree
//! is built from label-invariant choices only (equitable refinement, first
//! non-singleton target cell), so the minimum is a graph invariant.
//! Subtrees are pruned by prefix bounding against the best leaf found so far
//! and by automorphisms (twin transpositions and leaf coincidences).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{decode_graph6_str, encode_graph6};
use crate::graph::{Bits, Graph, VertexId};

pub const MAX_CANON_VERTICES: usize = 16;

const MAX_STORED_AUTOMORPHISMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical forms support at most {MAX_CANON_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// graph6 string of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        decode_graph6_str(&self.0).expect("canonical forms are valid graph6")
    }

    pub fn vertex_count(&self) -> usize {
        (self.0.as_bytes()[0] - 63) as usize
    }

    pub(crate) fn from_key(n: usize, key: u128) -> CanonicalForm {
        CanonicalForm(encode_graph6(&graph_from_key(n, key)))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

/// Packs the upper triangle of `g` under `order` (position -> vertex) into a
/// `u128`, first graph6 bit most significant.
fn key_of_order(g: &Graph, order: &[VertexId]) -> u128 {
    let rows = g.rows();
    let mut key = 0u128;
    for j in 1..order.len() {
        let col = order[j];
        for &i in &order[..j] {
            key = key << 1 | (rows[i] >> col & 1) as u128;
        }
    }
    key
}

/// Rebuilds the graph whose graph6 bit string is `key`.
pub(crate) fn graph_from_key(n: usize, key: u128) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(rows)
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    best: Option<(u128, Vec<VertexId>)>,
    automorphisms: Vec<Vec<u8>>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let mut c = Canonizer {
            g,
            n,
            total_bits: n * n.saturating_sub(1) / 2,
            best: None,
            automorphisms: Vec::new(),
        };
        c.seed_twin_automorphisms();
        c
    }

    /// Transpositions of twin vertices (same neighbourhood apart from each
    /// other) are automorphisms.
    fn seed_twin_automorphisms(&mut self) {
        let rows = self.g.rows();
        let mut done = 0u64;
        for u in 0..self.n {
            if done >> u & 1 == 1 {
                continue;
            }
            let mut prev = u;
            for v in u + 1..self.n {
                if done >> v & 1 == 0 && rows[u] & !(1 << v) == rows[v] & !(1 << u) {
                    done |= 1 << v;
                    let mut p: Vec<u8> = (0..self.n as u8).collect();
                    p.swap(prev, v);
                    self.automorphisms.push(p);
                    prev = v;
                }
            }
        }
    }

    fn refine(&self, cells: &mut Vec<u64>) {
        let rows = self.g.rows();
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter = cells[s];
                let mut i = 0;
                while i < cells.len() {
                    let cell = cells[i];
                    if cell & (cell - 1) == 0 {
                        i += 1;
                        continue;
                    }
                    let mut buckets = [0u64; 64];
                    let mut hi = 0;
                    let mut lo = usize::MAX;
                    for v in Bits(cell) {
                        let c = (rows[v] & splitter).count_ones() as usize;
                        buckets[c] |= 1 << v;
                        hi = hi.max(c);
                        lo = lo.min(c);
                    }
                    if lo == hi {
                        i += 1;
                        continue;
                    }
                    let parts: Vec<u64> = buckets[lo..=hi]
                        .iter()
                        .copied()
                        .filter(|&b| b != 0)
                        .collect();
                    let k = parts.len();
                    cells.splice(i..=i, parts);
                    changed = true;
                    i += k;
                }
                s += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn orbit_representatives_blocked(&self, fixed: &[VertexId], tried: u64, v: VertexId) -> bool {
        if tried == 0 {
            return false;
        }
        // Union-find over automorphisms that fix every individualized vertex.
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.automorphisms {
            if fixed.iter().any(|&f| a[f] as usize != f) {
                continue;
            }
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y as usize));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        Bits(tried).any(|u| find(&mut parent, u) == rv)
    }

    fn search(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<VertexId>) {
        self.refine(&mut cells);

        let lead = cells.iter().take_while(|c| c.count_ones() == 1).count();
        if let Some((best_key, _)) = &self.best {
            let order: Vec<VertexId> = cells[..lead]
                .iter()
                .map(|c| c.trailing_zeros() as usize)
                .collect();
            let bits = lead * lead.saturating_sub(1) / 2;
            let prefix = key_of_order(self.g, &order);
            let best_prefix = if bits == 0 {
                0
            } else {
                best_key >> (self.total_bits - bits)
            };
            if prefix > best_prefix {
                return;
            }
        }

        if lead == cells.len() {
            let order: Vec<VertexId> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let key = key_of_order(self.g, &order);
            match &self.best {
                Some((best_key, best_order)) if key == *best_key => {
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut a = vec![0u8; self.n];
                        for (p, &v) in best_order.iter().enumerate() {
                            a[v] = order[p] as u8;
                        }
                        self.automorphisms.push(a);
                    }
                }
                Some((best_key, _)) if key > *best_key => {}
                _ => self.best = Some((key, order)),
            }
            return;
        }

        let t = lead
            + cells[lead..]
                .iter()
                .position(|c| c.count_ones() > 1)
                .unwrap_or(0);
        let target = cells[t];
        let mut tried = 0u64;
        for v in Bits(target) {
            if self.orbit_representatives_blocked(fixed, tried, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[t + 1..]);
            fixed.push(v);
            self.search(child, fixed);
            fixed.pop();
            tried |= 1 << v;
        }
    }

    fn run(mut self) -> (u128, Vec<VertexId>) {
        if self.n == 0 {
            return (0, Vec::new());
        }
        let cells = vec![self.g.vertex_mask()];
        self.search(cells, &mut Vec::new());
        self.best.expect("search visits at least one leaf")
    }
}

fn check_size(g: &Graph) -> Result<(), CanonError> {
    if g.vertex_count() > MAX_CANON_VERTICES {
        Err(CanonError::TooLarge(g.vertex_count()))
    } else {
        Ok(())
    }
}

/// Canonical key: the graph6 bit string of the canonical relabelling.
pub(crate) fn canonical_key(g: &Graph) -> u128 {
    debug_assert!(g.vertex_count() <= MAX_CANON_VERTICES);
    Canonizer::new(g).run().0
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<VertexId>, CanonError> {
    check_size(g)?;
    let (_, order) = Canonizer::new(g).run();
    let mut labeling = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    Ok(labeling)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    check_size(g)?;
    Ok(graph_from_key(g.vertex_count(), canonical_key(g)))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    check_size(g)?;
    Ok(CanonicalForm::from_key(g.vertex_count(), canonical_key(g)))
}

/// Whether an edge-preserving bijection between `g` and `h` exists.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    if g.vertex_count() <= MAX_CANON_VERTICES {
        canonical_key(g) == canonical_key(h)
    } else {
        find_isomorphism(g, h).is_some()
    }
}

/// Backtracking isomorphism search for graphs too large to canonicalize.
fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut map = vec![usize::MAX; n];
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, v: usize, used: u64) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        let dv = g.neighbor_mask(v).count_ones();
        for w in Bits(h.vertex_mask() & !used) {
            if h.neighbor_mask(w).count_ones() != dv {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                if extend(g, h, map, v + 1, used | 1 << w) {
                    return true;
                }
            }
        }
        false
    }
    extend(g, h, &mut map, 0, 0).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelled_cycle_has_same_form() {
        let c5 = Graph::cycle(5).unwrap();
        let other = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn distinct_graphs_differ() {
        let c4 = Graph::cycle(4).unwrap();
        assert_ne!(
            canonical_form(&Graph::diamond()).unwrap(),
            canonical_form(&c4).unwrap()
        );
    }

    #[test]
    fn paw_has_one_form_over_all_labelings() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let forms: std::collections::BTreeSet<_> = all_permutations(4)
            .iter()
            .map(|p| canonical_form(&paw.relabel(p)).unwrap())
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(isomorphic(
            &Graph::wheel(3).unwrap(),
            &Graph::complete(4).unwrap()
        ));
        assert!(!isomorphic(&Graph::diamond(), &Graph::butterfly()));
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert!(!isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let lab = canonical_labeling(&g).unwrap();
        assert_eq!(g.relabel(&lab), canonical_graph(&g).unwrap());
    }

    #[test]
    fn idempotent() {
        let g = Graph::butterfly();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
    }

    #[test]
    fn oversize_rejected_but_isomorphism_still_works() {
        let big = Graph::cycle(20).unwrap();
        assert_eq!(canonical_form(&big), Err(CanonError::TooLarge(20)));
        let perm: Vec<usize> = (0..20).map(|v| (v * 3) % 20).collect();
        let shuffled = big.relabel(&perm);
        assert!(isomorphic(&big, &shuffled));
        let two = Graph::cycle(10)
            .unwrap()
            .disjoint_union(&Graph::cycle(10).unwrap())
            .unwrap();
        assert!(!isomorphic(&big, &two));
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        // would need n! leaves without automorphism pruning
        for g in [
            Graph::complete(16).unwrap(),
            Graph::complete_bipartite(8, 8).unwrap(),
            Graph::empty(16).unwrap(),
            Graph::cycle(16).unwrap(),
        ] {
            let f = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        }
    }

    #[test]
    fn key_roundtrip() {
        let g = Graph::wheel(5).unwrap();
        let key = key_of_order(&g, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(graph_from_key(6, key), g);
        assert_eq!(CanonicalForm::from_key(6, key).as_str(), encode_graph6(&g));
    }
}
