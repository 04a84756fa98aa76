use crate::graph::{Bits, Edge, Graph, VertexId};
use crate::recognition::for_each_subset;

/// Vertices whose deletion increases the number of components.
pub fn cut_vertices(g: &Graph) -> Vec<VertexId> {
    let all = g.vertex_mask();
    let base = g.component_count_within(all);
    (0..g.vertex_count())
        .filter(|&v| g.component_count_within(all & !(1 << v)) > base)
        .collect()
}

/// Vertex sets of the blocks, each sorted, listed by smallest member. Isolated
/// vertices and bridges are blocks of their own.
pub fn block_vertex_sets(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut st = BlockDfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == usize::MAX {
            if g.neighbor_mask(v) == 0 {
                st.blocks.push(1 << v);
                st.disc[v] = st.time;
                st.time += 1;
            } else {
                st.visit(v, usize::MAX);
            }
        }
    }
    let mut sets: Vec<Vec<VertexId>> = st.blocks.into_iter().map(|m| Bits(m).collect()).collect();
    sets.sort();
    sets
}

struct BlockDfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<u64>,
}

impl BlockDfs<'_> {
    fn visit(&mut self, u: VertexId, parent: VertexId) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for w in Bits(self.g.neighbor_mask(u)) {
            if self.disc[w] == usize::MAX {
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut mask = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        mask |= 1 << a | 1 << b;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(mask);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

pub fn blocks(g: &Graph) -> Vec<Graph> {
    block_vertex_sets(g)
        .iter()
        .map(|s| g.induced(s).expect("block vertices are in range"))
        .collect()
}

/// Edges whose deletion increases the number of components.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let base = g.component_count_within(g.vertex_mask());
    g.edges()
        .filter(|&(u, v)| {
            let mut h = g.clone();
            h.clear_edge(u, v);
            h.component_count_within(h.vertex_mask()) > base
        })
        .collect()
}

pub fn has_bridge(g: &Graph) -> bool {
    !bridges(g).is_empty()
}

/// Smallest `k` such that some `k` vertices disconnect the graph; `n - 1` for
/// complete graphs and `0` for disconnected or empty ones. Brute force over
/// vertex subsets in order of size.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return 0;
    }
    let all = g.vertex_mask();
    for k in 1..n.saturating_sub(1) {
        if for_each_subset(n, k, &mut |s| g.component_count_within(all & !s) > 1) {
            return k;
        }
    }
    n - 1
}

/// At least four vertices and no separator of fewer than three.
pub fn is_triconnected(g: &Graph) -> bool {
    g.vertex_count() >= 4 && is_k_connected(g, 3)
}

/// Connected and no set of fewer than `k` vertices disconnects it. Complete
/// graphs only pass up to `k = n - 1`.
pub(crate) fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k || !g.is_connected() {
        return false;
    }
    let all = g.vertex_mask();
    (1..k).all(|size| !for_each_subset(n, size, &mut |s| g.component_count_within(all & !s) > 1))
}

/// At least three vertices, connected, and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && is_k_connected(g, 2)
}
