use serde::Serialize;

use crate::graph::{Bits, Edge, Graph, GraphError, VertexId};

use super::connectivity::is_triconnected;

/// `Some(r)` if the graph is the r-wheel.
pub fn is_wheel(g: &Graph) -> Option<usize> {
    wheel_labeling(g).map(|l| l.len() - 1)
}

/// A hub followed by the rim in cycle order, so that `order[i]` plays vertex
/// `i` of `Graph::wheel(r)`.
fn wheel_labeling(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    if n < 4 || g.edge_count() != 2 * (n - 1) {
        return None;
    }
    let all = g.vertex_mask();
    let hub = (0..n).find(|&h| {
        g.neighbor_mask(h) == all & !(1 << h)
            && (0..n).all(|v| v == h || (g.neighbor_mask(v) & !(1 << h)).count_ones() == 2)
            && g.is_connected_mask(all & !(1 << h))
    })?;
    let rim = all & !(1 << hub);
    let start = rim.trailing_zeros() as usize;
    let mut order = vec![hub, start];
    let (mut prev, mut cur) = (usize::MAX, start);
    for _ in 1..n - 1 {
        let next = Bits(g.neighbor_mask(cur) & rim).find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Some(order)
}

/// The split of `v` along `{a, b}`: `v` keeps its id and the neighbours in
/// `a`; a new vertex with id `n` takes the neighbours in `b` and is joined to
/// `v`.
pub fn split(g: &Graph, v: VertexId, a: &[VertexId], b: &[VertexId]) -> Result<Graph, GraphError> {
    g.check_vertex(v)?;
    let bad = |why: String| Err(GraphError::InvalidSplit(why));
    let nbrs = g.neighbor_mask(v);
    if nbrs.count_ones() < 4 {
        return bad(format!(
            "vertex {v} has degree {}, at least 4 is needed",
            nbrs.count_ones()
        ));
    }
    let to_mask = |s: &[VertexId]| -> Result<u64, GraphError> {
        let mut m = 0u64;
        for &x in s {
            g.check_vertex(x)?;
            if m >> x & 1 == 1 {
                return Err(GraphError::InvalidSplit(format!("vertex {x} listed twice")));
            }
            m |= 1 << x;
        }
        Ok(m)
    };
    let (ma, mb) = (to_mask(a)?, to_mask(b)?);
    if ma.count_ones() < 2 || mb.count_ones() < 2 {
        return bad("both sides need at least two vertices".into());
    }
    if ma & mb != 0 || ma | mb != nbrs {
        return bad(format!("sides do not partition the neighbourhood of {v}"));
    }
    let mut h = g.clone();
    let w = h.push_vertex();
    for x in Bits(mb) {
        h.clear_edge(v, x);
        h.set_edge(w, x);
    }
    h.set_edge(v, w);
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateStep {
    EdgeAddition {
        edge: Edge,
    },
    Split {
        vertex: VertexId,
        a: Vec<VertexId>,
        b: Vec<VertexId>,
    },
}

/// Growth of a graph from `Graph::wheel(base_r)` by edge additions and
/// splits. `labeling[i]` is the vertex of the certified graph played by
/// vertex `i` of the replayed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WheelCertificate {
    pub base_r: usize,
    pub steps: Vec<CertificateStep>,
    pub labeling: Vec<VertexId>,
}

impl WheelCertificate {
    /// Applies the steps, returning the final graph in replay ids.
    pub fn replay(&self) -> Result<Graph, GraphError> {
        let mut g = Graph::wheel(self.base_r)?;
        for step in &self.steps {
            g = match step {
                CertificateStep::EdgeAddition { edge } => g.add_edge(edge.0, edge.1)?,
                CertificateStep::Split { vertex, a, b } => split(&g, *vertex, a, b)?,
            };
        }
        Ok(g)
    }

    /// Replays and relabels onto the certified graph's ids.
    pub fn replay_labeled(&self) -> Result<Graph, GraphError> {
        let g = self.replay()?;
        if self.labeling.len() != g.vertex_count() {
            return Err(GraphError::InvalidSplit(
                "labeling has the wrong length".into(),
            ));
        }
        Ok(g.relabel(&self.labeling))
    }
}

/// Works backwards from `g`, deleting an edge or contracting an edge with no
/// common neighbours while staying triconnected, until a wheel remains. Every
/// triconnected non-wheel graph admits such a step, so the search never
/// backtracks. `None` for graphs that are not triconnected.
pub fn wheel_certificate(g: &Graph) -> Option<WheelCertificate> {
    if !is_triconnected(g) {
        return None;
    }
    Some(certify(g))
}

fn certify(g: &Graph) -> WheelCertificate {
    if let Some(order) = wheel_labeling(g) {
        return WheelCertificate {
            base_r: order.len() - 1,
            steps: Vec::new(),
            labeling: order,
        };
    }
    for (x, y) in g.edges() {
        let mut h = g.clone();
        h.clear_edge(x, y);
        if is_triconnected(&h) {
            let mut cert = certify(&h);
            let inv = inverse(&cert.labeling);
            let (p, q) = (inv[x], inv[y]);
            cert.steps.push(CertificateStep::EdgeAddition {
                edge: (p.min(q), p.max(q)),
            });
            return cert;
        }
    }
    for (x, y) in g.edges() {
        let (nx, ny) = (
            g.neighbor_mask(x) & !(1 << y),
            g.neighbor_mask(y) & !(1 << x),
        );
        if nx & ny != 0 || nx.count_ones() < 2 || ny.count_ones() < 2 {
            continue;
        }
        let h = g.contract_unchecked(x, y);
        if !is_triconnected(&h) {
            continue;
        }
        let mut cert = certify(&h);
        // ids of `g` other than `y` shift down by one in `h`
        let to_h = |w: VertexId| if w > y { w - 1 } else { w };
        let inv = inverse(&cert.labeling);
        let side = |m: u64| -> Vec<VertexId> {
            let mut s: Vec<VertexId> = Bits(m).map(|w| inv[to_h(w)]).collect();
            s.sort_unstable();
            s
        };
        let step = CertificateStep::Split {
            vertex: inv[x],
            a: side(nx),
            b: side(ny),
        };
        let new_id = cert.labeling.len();
        let mut labeling: Vec<VertexId> = cert
            .labeling
            .iter()
            .map(|&w| if w >= y { w + 1 } else { w })
            .collect();
        debug_assert_eq!(labeling.len(), new_id);
        labeling.push(y);
        cert.steps.push(step);
        cert.labeling = labeling;
        return cert;
    }
    unreachable!("triconnected graph with no reducing edge is a wheel")
}

fn inverse(perm: &[VertexId]) -> Vec<VertexId> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
