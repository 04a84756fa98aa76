use serde::Serialize;
use thiserror::Error;

use crate::codec::encode_graph6;
use crate::graph::{Bits, Graph, VertexId};

use super::connectivity::is_triconnected;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("vertex {vertex} is not in the graph on {n} vertices")]
    NotSubset { vertex: VertexId, n: usize },
    #[error("separator has {0} vertices, at most 3 are allowed")]
    TooLarge(usize),
    #[error("deleting {0:?} does not increase the number of components")]
    NotASeparator(Vec<VertexId>),
    #[error("trace does not replay: {0}")]
    BadTrace(String),
}

/// A set of at most three vertices whose deletion increases the number of
/// components of the graph it was built against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeparatorSet(u64);

impl SeparatorSet {
    pub fn new(g: &Graph, vertices: &[VertexId]) -> Result<Self, DecompositionError> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= g.vertex_count() {
                return Err(DecompositionError::NotSubset {
                    vertex: v,
                    n: g.vertex_count(),
                });
            }
            mask |= 1 << v;
        }
        if mask.count_ones() > 3 {
            return Err(DecompositionError::TooLarge(mask.count_ones() as usize));
        }
        let all = g.vertex_mask();
        if g.component_count_within(all & !mask) <= g.component_count_within(all) {
            return Err(DecompositionError::NotASeparator(Bits(mask).collect()));
        }
        Ok(SeparatorSet(mask))
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        Bits(self.0).collect()
    }

    pub fn mask(&self) -> u64 {
        self.0
    }
}

/// `C(G, S)`: for each component of `G - S`, the graph induced on it plus
/// `S`, with `S` made a clique.
pub fn augmented_components(g: &Graph, s: &SeparatorSet) -> Result<Vec<Graph>, DecompositionError> {
    if let Some(v) = Bits(s.0 & !g.vertex_mask()).next() {
        return Err(DecompositionError::NotSubset {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(augmented_parts(g, s.0)
        .into_iter()
        .map(|(_, h)| h)
        .collect())
}

/// Each part together with its sorted host vertex list (local id -> host id).
fn augmented_parts(g: &Graph, s: u64) -> Vec<(Vec<VertexId>, Graph)> {
    let rest = g.vertex_mask() & !s;
    g.component_masks_within(rest)
        .into_iter()
        .map(|c| {
            let verts: Vec<VertexId> = Bits(c | s).collect();
            let mut h = g.induced_mask(c | s);
            let local: Vec<VertexId> = verts
                .iter()
                .enumerate()
                .filter(|(_, &v)| s >> v & 1 == 1)
                .map(|(i, _)| i)
                .collect();
            for (i, &a) in local.iter().enumerate() {
                for &b in &local[i + 1..] {
                    h.set_edge(a, b);
                }
            }
            (verts, h)
        })
        .collect()
}

/// How a node of the recursion was resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TraceSplit {
    /// Triconnected or a clique on at most three vertices.
    Member,
    /// Split along a separator of one or two vertices.
    Separator { vertices: Vec<VertexId> },
    /// Disconnected input without such a separator choice; one child per component.
    Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceNode {
    pub graph6: String,
    #[serde(flatten)]
    pub split: TraceSplit,
    pub children: Vec<TraceChild>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceChild {
    /// Parent vertex of each child vertex.
    pub vertices: Vec<VertexId>,
    pub node: TraceNode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriconnectedDecomposition {
    /// graph6 strings of the members, in trace leaf order.
    #[serde(serialize_with = "serialize_graphs")]
    pub members: Vec<Graph>,
    pub trace: TraceNode,
}

fn serialize_graphs<S: serde::Serializer>(gs: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(encode_graph6))
}

impl TriconnectedDecomposition {
    /// Re-derives every node from the input graph and checks that the
    /// leaves are exactly the members.
    pub fn replay(&self, g: &Graph) -> Result<(), DecompositionError> {
        let mut leaves = Vec::new();
        replay_node(&self.trace, g, &mut leaves)?;
        if leaves != self.members {
            return Err(DecompositionError::BadTrace(
                "leaves differ from members".into(),
            ));
        }
        Ok(())
    }
}

fn replay_node(
    node: &TraceNode,
    g: &Graph,
    leaves: &mut Vec<Graph>,
) -> Result<(), DecompositionError> {
    let bad = |why: &str| DecompositionError::BadTrace(why.to_string());
    if node.graph6 != encode_graph6(g) {
        return Err(bad("node graph mismatch"));
    }
    let expected: Vec<(Vec<VertexId>, Graph)> = match &node.split {
        TraceSplit::Member => {
            if !is_member(g) || !node.children.is_empty() {
                return Err(bad("leaf is not a member"));
            }
            leaves.push(g.clone());
            return Ok(());
        }
        TraceSplit::Separator { vertices } => {
            let s = SeparatorSet::new(g, vertices)?;
            if vertices.len() > 2 {
                return Err(bad("separator larger than two"));
            }
            augmented_parts(g, s.mask())
        }
        TraceSplit::Components => g
            .component_masks()
            .into_iter()
            .map(|c| (Bits(c).collect(), g.induced_mask(c)))
            .collect(),
    };
    if expected.len() != node.children.len() {
        return Err(bad("wrong number of children"));
    }
    for ((verts, h), child) in expected.iter().zip(&node.children) {
        if &child.vertices != verts {
            return Err(bad("child vertex map mismatch"));
        }
        replay_node(&child.node, h, leaves)?;
    }
    Ok(())
}

fn is_member(g: &Graph) -> bool {
    let n = g.vertex_count();
    (n <= 3 && g.edge_count() == n * n.saturating_sub(1) / 2) || is_triconnected(g)
}

/// Separators of size one (then two) of a connected graph, in lexicographic
/// order of their sorted vertex lists.
pub(crate) fn small_separators(g: &Graph) -> impl Iterator<Item = Vec<VertexId>> + '_ {
    let n = g.vertex_count();
    let all = g.vertex_mask();
    let base = g.component_count_within(all);
    let singles = (0..n).map(|v| vec![v]);
    let pairs = (0..n).flat_map(move |a| (a + 1..n).map(move |b| vec![a, b]));
    singles.chain(pairs).filter(move |s| {
        g.component_count_within(all & !s.iter().fold(0u64, |m, &v| m | 1 << v)) > base
    })
}

/// The minimum-size separators of size at most two, lexicographically sorted.
pub fn minimum_small_separators(g: &Graph) -> Vec<Vec<VertexId>> {
    let all: Vec<Vec<VertexId>> = small_separators(g).collect();
    match all.first().map(Vec::len) {
        Some(k) => all.into_iter().filter(|s| s.len() == k).collect(),
        None => Vec::new(),
    }
}

/// Picks one separator from the minimum-size separators of a graph.
pub type SeparatorChoice<'a> = dyn FnMut(&Graph, &[Vec<VertexId>]) -> Vec<VertexId> + 'a;

/// `Q(G)`, splitting on the lexicographically smallest minimum-size
/// separator at every step. A disconnected graph is first split into its
/// components.
pub fn triconnected_components(g: &Graph) -> TriconnectedDecomposition {
    triconnected_components_with(g, &mut |_, seps| seps[0].clone())
}

/// `Q(G)` with the separator at each step picked by `choose` from the
/// non-empty list of minimum-size separators of the current graph.
pub fn triconnected_components_with(
    g: &Graph,
    choose: &mut SeparatorChoice<'_>,
) -> TriconnectedDecomposition {
    let mut members = Vec::new();
    let trace = decompose(g, choose, &mut members);
    TriconnectedDecomposition { members, trace }
}

fn decompose(g: &Graph, choose: &mut SeparatorChoice<'_>, members: &mut Vec<Graph>) -> TraceNode {
    let graph6 = encode_graph6(g);
    if is_member(g) {
        members.push(g.clone());
        return TraceNode {
            graph6,
            split: TraceSplit::Member,
            children: Vec::new(),
        };
    }
    let (split, parts) = if !g.is_connected() {
        let parts = g
            .component_masks()
            .into_iter()
            .map(|c| (Bits(c).collect(), g.induced_mask(c)))
            .collect();
        (TraceSplit::Components, parts)
    } else {
        let seps = minimum_small_separators(g);
        assert!(
            !seps.is_empty(),
            "connected non-member graphs have a small separator"
        );
        let s = choose(g, &seps);
        assert!(
            seps.contains(&s),
            "chosen separator must be one of the offered ones"
        );
        let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
        (
            TraceSplit::Separator { vertices: s },
            augmented_parts(g, mask),
        )
    };
    let children = parts
        .into_iter()
        .map(|(vertices, h)| TraceChild {
            vertices,
            node: decompose(&h, choose, members),
        })
        .collect();
    TraceNode {
        graph6,
        split,
        children,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn multiset(gs: &[Graph]) -> Vec<String> {
        let mut v: Vec<String> = gs
            .iter()
            .map(|g| canonical_form(g).unwrap().to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn augmented_examples() {
        let k3 = Graph::complete(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let s = SeparatorSet::new(&c4, &[0, 2]).unwrap();
        assert_eq!(
            augmented_components(&c4, &s).unwrap(),
            vec![k3.clone(), k3.clone()]
        );
        let b = Graph::butterfly();
        let s = SeparatorSet::new(&b, &[0]).unwrap();
        assert_eq!(
            augmented_components(&b, &s).unwrap(),
            vec![k3.clone(), k3.clone()]
        );
        let d = Graph::diamond();
        let s = SeparatorSet::new(&d, &[0, 1]).unwrap();
        assert_eq!(augmented_components(&d, &s).unwrap(), vec![k3.clone(), k3]);

        assert!(matches!(
            SeparatorSet::new(&c4, &[0, 1]),
            Err(DecompositionError::NotASeparator(_))
        ));
        assert!(matches!(
            SeparatorSet::new(&c4, &[7]),
            Err(DecompositionError::NotSubset { .. })
        ));
        let s = SeparatorSet::new(&Graph::cycle(8).unwrap(), &[0, 6]).unwrap();
        assert!(matches!(
            augmented_components(&c4, &s),
            Err(DecompositionError::NotSubset { .. })
        ));
    }

    #[test]
    fn q_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(triconnected_components(&k4).members, vec![k4.clone()]);
        let d = triconnected_components(&Graph::diamond());
        assert_eq!(multiset(&d.members), multiset(&[k3.clone(), k3.clone()]));
        let c5 = Graph::cycle(5).unwrap();
        let q = triconnected_components(&c5);
        assert_eq!(
            multiset(&q.members),
            multiset(&[k3.clone(), k3.clone(), k3])
        );
        q.replay(&c5).unwrap();
    }

    #[test]
    fn disconnected_input_splits_into_components() {
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        let q = triconnected_components(&g);
        assert_eq!(q.trace.split, TraceSplit::Components);
        assert_eq!(q.members.len(), 2);
        q.replay(&g).unwrap();
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let c5 = Graph::cycle(5).unwrap();
        let mut q = triconnected_components(&c5);
        q.members.pop();
        assert!(q.replay(&c5).is_err());
    }
}
