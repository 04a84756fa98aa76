//! Subdivision search: injective branch-vertex maps followed by routing of
//! internally disjoint host paths, one per pattern edge.

use crate::graph::{Bits, Edge, Graph, VertexId};

use super::embedding::TopologicalEmbedding;

struct Router<'a> {
    host: &'a Graph,
    edges: Vec<Edge>,
    branch: Vec<VertexId>,
    branch_mask: u64,
    paths: Vec<Vec<VertexId>>,
}

impl<'a> Router<'a> {
    /// Routes pattern edges `i..` avoiding `blocked` interior vertices.
    fn route(&mut self, i: usize, blocked: u64) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (a, b) = self.edges[i];
        let (s, t) = (self.branch[a], self.branch[b]);
        let avail = self.host.vertex_mask() & !blocked & !self.branch_mask;
        // every remaining edge needs at least a conceivable route
        for &(x, y) in &self.edges[i + 1..] {
            let (p, q) = (self.branch[x], self.branch[y]);
            if !self.host.has_edge(p, q) && !self.reachable(p, q, avail) {
                return false;
            }
        }
        let mut path = vec![s];
        self.extend_path(i, t, &mut path, avail, blocked)
    }

    fn reachable(&self, s: VertexId, t: VertexId, avail: u64) -> bool {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.host.neighbor_mask(v);
            }
            if next >> t & 1 == 1 {
                return true;
            }
            next &= avail & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }

    fn extend_path(
        &mut self,
        i: usize,
        t: VertexId,
        path: &mut Vec<VertexId>,
        avail: u64,
        blocked: u64,
    ) -> bool {
        let last = *path.last().expect("path starts at a branch vertex");
        let nbrs = self.host.neighbor_mask(last);
        if nbrs >> t & 1 == 1 {
            path.push(t);
            self.paths[i] = path.clone();
            let interior = path[1..path.len() - 1]
                .iter()
                .fold(0u64, |m, &v| m | 1 << v);
            if self.route(i + 1, blocked | interior) {
                return true;
            }
            path.pop();
        }
        let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
        for v in Bits(nbrs & avail & !on_path) {
            if !self.reachable(v, t, avail & !on_path & !(1 << v)) {
                continue;
            }
            path.push(v);
            if self.extend_path(i, t, path, avail, blocked) {
                return true;
            }
            path.pop();
        }
        false
    }
}

fn assign(
    host: &Graph,
    pattern: &Graph,
    order: &[VertexId],
    k: usize,
    branch: &mut Vec<VertexId>,
    used: u64,
) -> Option<TopologicalEmbedding> {
    if k == order.len() {
        let mut edges: Vec<Edge> = pattern.edges().collect();
        // direct host edges first, they cost no interior vertices
        edges.sort_by_key(|&(a, b)| !host.has_edge(branch[a], branch[b]));
        let mut r = Router {
            host,
            paths: vec![Vec::new(); edges.len()],
            edges,
            branch: branch.clone(),
            branch_mask: used,
        };
        if r.route(0, 0) {
            let mut paths: Vec<(Edge, Vec<VertexId>)> =
                r.edges.iter().copied().zip(r.paths).collect();
            paths.sort_by_key(|(e, _)| *e);
            return Some(TopologicalEmbedding {
                branch_vertices: r.branch,
                paths,
            });
        }
        return None;
    }
    let a = order[k];
    let need = pattern.deg(a);
    for v in Bits(host.vertex_mask() & !used) {
        if host.deg(v) < need {
            continue;
        }
        branch[a] = v;
        if let Some(t) = assign(host, pattern, order, k + 1, branch, used | 1 << v) {
            return Some(t);
        }
    }
    None
}

pub(crate) fn find_topological_minor(
    host: &Graph,
    pattern: &Graph,
) -> Option<TopologicalEmbedding> {
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let hd = host.degree_sequence();
    let pd = pattern.degree_sequence();
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }
    let mut order: Vec<VertexId> = (0..pattern.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.deg(v)));
    let mut branch = vec![0; pattern.vertex_count()];
    assign(host, pattern, &order, 0, &mut branch, 0)
}
