//! Immutable simple undirected graphs on at most 62 vertices.
//!
//! Every graph is stored as one `u64` adjacency row per vertex. All
//! operations that remove vertices return a graph whose ids are re-densified
//! to `0..n` while keeping the relative order of the surviving vertices.

use std::fmt;

use thiserror::Error;

/// Largest vertex count representable (the short graph6 range).
pub const MAX_VERTICES: usize = 62;

pub type VertexId = usize;

/// An undirected edge, always normalized so that `.0 < .1`.
pub type Edge = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("{what} needs a parameter of at least {min}, got {value}")]
    ParameterTooSmall {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("invalid split: {0}")]
    InvalidSplit(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Removes bit `v` from `mask` and shifts all higher bits down by one.
#[inline]
pub(crate) fn squeeze_bit(mask: u64, v: usize) -> u64 {
    let low = mask & low_mask(v);
    let high = if v + 1 >= 64 { 0 } else { mask >> (v + 1) };
    low | (high << v)
}

/// Keeps only the bits in `keep`, packing them densely in ascending order.
pub(crate) fn compress_bits(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, b) in Bits(keep).enumerate() {
        if mask >> b & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric, loop-free
    /// and confined to `0..n`; this is checked.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for (v, &r) in rows.iter().enumerate() {
            if r >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            if r & !low_mask(n) != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - r.leading_zeros() as usize,
                    n,
                });
            }
            for u in Bits(r) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::MissingEdge(u, v));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            rows,
        }
    }

    pub fn complete(r: usize) -> Result<Graph> {
        if r < 1 {
            return Err(GraphError::ParameterTooSmall {
                what: "complete graph",
                value: r,
                min: 1,
            });
        }
        let mut g = Graph::empty(r)?;
        let all = low_mask(r);
        for v in 0..r {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// `K_{r1,r2}` with the first part on `0..r1`.
    pub fn complete_bipartite(r1: usize, r2: usize) -> Result<Graph> {
        for r in [r1, r2] {
            if r < 1 {
                return Err(GraphError::ParameterTooSmall {
                    what: "complete bipartite graph",
                    value: r,
                    min: 1,
                });
            }
        }
        let mut g = Graph::empty(r1 + r2)?;
        for u in 0..r1 {
            for v in r1..r1 + r2 {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(r-1)-0`.
    pub fn cycle(r: usize) -> Result<Graph> {
        if r < 3 {
            return Err(GraphError::ParameterTooSmall {
                what: "cycle",
                value: r,
                min: 3,
            });
        }
        let mut g = Graph::path(r)?;
        g.set_edge(0, r - 1);
        Ok(g)
    }

    /// The path `0-1-...-(r-1)` on `r` vertices.
    pub fn path(r: usize) -> Result<Graph> {
        if r < 1 {
            return Err(GraphError::ParameterTooSmall {
                what: "path",
                value: r,
                min: 1,
            });
        }
        let mut g = Graph::empty(r)?;
        for v in 1..r {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    /// The r-wheel: hub `0` joined to the rim cycle `1-2-...-r-1`.
    pub fn wheel(r: usize) -> Result<Graph> {
        if r < 3 {
            return Err(GraphError::ParameterTooSmall {
                what: "wheel",
                value: r,
                min: 3,
            });
        }
        let mut g = Graph::empty(r + 1)?;
        for v in 1..=r {
            g.set_edge(0, v);
            g.set_edge(v, if v == r { 1 } else { v + 1 });
        }
        Ok(g)
    }

    /// `K4` minus an edge; the degree-3 vertices are `0` and `1`.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    /// Two triangles sharing vertex `0`.
    pub fn butterfly() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbor_mask(&self, v: VertexId) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        Ok(Bits(self.rows[v]).collect())
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Minimum degree; `0` for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.deg(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertex_unchecked(v))
    }

    pub(crate) fn delete_vertex_unchecked(&self, v: VertexId) -> Graph {
        let rows = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| squeeze_bit(self.rows[u], v))
            .collect();
        Graph {
            n: self.n - 1,
            rows,
        }
    }

    /// Deletes every vertex in `mask`.
    pub fn delete_vertex_mask(&self, mask: u64) -> Graph {
        self.induced_mask(self.vertex_mask() & !mask)
    }

    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Adds an edge that is not yet present.
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Contracts `{u, v}`. The merged vertex takes the smaller id; the larger
    /// id is removed and later ids shift down by one. Parallel edges are
    /// merged and the loop is dropped.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        Ok(self.contract_unchecked(u.min(v), u.max(v)))
    }

    pub(crate) fn contract_unchecked(&self, keep: VertexId, gone: VertexId) -> Graph {
        debug_assert!(keep < gone);
        let mut rows = self.rows.clone();
        let merged = (rows[keep] | rows[gone]) & !(1 << keep) & !(1 << gone);
        rows[keep] = merged;
        for w in Bits(merged) {
            rows[w] |= 1 << keep;
        }
        for w in Bits(self.rows[gone]) {
            rows[w] &= !(1 << gone);
        }
        rows.remove(gone);
        for r in rows.iter_mut() {
            *r = squeeze_bit(*r, gone);
        }
        Graph {
            n: self.n - 1,
            rows,
        }
    }

    /// Vertices of `other` are shifted to `n..n + other.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// The subgraph induced by `vertices`, relabelled in ascending id order.
    pub fn induced(&self, vertices: &[VertexId]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced_mask(mask))
    }

    pub fn induced_mask(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let rows = Bits(mask)
            .map(|v| compress_bits(self.rows[v], mask))
            .collect();
        Graph {
            n: mask.count_ones() as usize,
            rows,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for w in Bits(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[w];
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Vertex set of the component containing `v`, restricted to `within`.
    pub fn component_mask_within(&self, v: VertexId, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.rows[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of the subgraph induced by `within`, ordered by least vertex.
    pub fn component_masks_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_mask_within(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn component_masks(&self) -> Vec<u64> {
        self.component_masks_within(self.vertex_mask())
    }

    pub fn component_count_within(&self, within: u64) -> usize {
        let mut rest = within & self.vertex_mask();
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.component_mask_within(v, rest);
            count += 1;
        }
        count
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.component_masks()
            .into_iter()
            .map(|m| Bits(m).collect())
            .collect()
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Whether the vertices in `mask` induce a connected subgraph (`false`
    /// for the empty set).
    pub fn is_connected_mask(&self, mask: u64) -> bool {
        mask != 0 && self.component_mask_within(mask.trailing_zeros() as usize, mask) == mask
    }

    /// Number of edges with both ends in `mask`.
    pub fn edge_count_within(&self, mask: u64) -> usize {
        Bits(mask)
            .map(|v| (self.rows[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: VertexId, v: VertexId) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: VertexId, v: VertexId) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Appends an isolated vertex.
    pub(crate) fn push_vertex(&mut self) -> VertexId {
        assert!(self.n < MAX_VERTICES);
        self.rows.push(0);
        self.n += 1;
        self.n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}
