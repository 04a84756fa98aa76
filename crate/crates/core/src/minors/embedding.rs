use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bits, Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("embedding has {found} branch sets, pattern has {expected} vertices")]
    WrongArity { expected: usize, found: usize },
    #[error("branch set of pattern vertex {0} is empty")]
    EmptyBranchSet(VertexId),
    #[error("branch set of pattern vertex {0} leaves the host")]
    OutsideHost(VertexId),
    #[error("branch sets of pattern vertices {0} and {1} overlap")]
    Overlap(VertexId, VertexId),
    #[error("branch set of pattern vertex {0} is not connected in the host")]
    Disconnected(VertexId),
    #[error("no host edge realizes pattern edge {0}-{1}")]
    MissingEdge(VertexId, VertexId),
    #[error("path for pattern edge {0}-{1} is invalid")]
    BadPath(VertexId, VertexId),
    #[error("paths for pattern edges {0:?} and {1:?} are not internally disjoint")]
    PathsIntersect(Edge, Edge),
    #[error("branch vertex map is not injective")]
    NotInjective,
}

/// Branch-set model of a minor: pattern vertex `a` is represented by the
/// connected host vertex set `branch_sets[a]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MinorEmbedding {
    #[serde(serialize_with = "serialize_masks")]
    branch_sets: Vec<u64>,
}

fn serialize_masks<S: serde::Serializer>(masks: &[u64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(masks.len()))?;
    for &m in masks {
        seq.serialize_element(&Bits(m).collect::<Vec<_>>())?;
    }
    seq.end()
}

impl MinorEmbedding {
    pub fn from_masks(branch_sets: Vec<u64>) -> Self {
        MinorEmbedding { branch_sets }
    }

    pub fn from_sets(sets: &[Vec<VertexId>]) -> Self {
        MinorEmbedding {
            branch_sets: sets
                .iter()
                .map(|s| s.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        }
    }

    /// The embedding mapping every vertex of a graph on `n` vertices to itself.
    pub fn identity(n: usize) -> Self {
        MinorEmbedding {
            branch_sets: (0..n).map(|v| 1u64 << v).collect(),
        }
    }

    pub fn pattern_size(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn branch_mask(&self, a: VertexId) -> u64 {
        self.branch_sets[a]
    }

    pub fn branch_set(&self, a: VertexId) -> Vec<VertexId> {
        Bits(self.branch_sets[a]).collect()
    }

    pub fn branch_sets(&self) -> Vec<Vec<VertexId>> {
        (0..self.branch_sets.len())
            .map(|a| self.branch_set(a))
            .collect()
    }

    /// Checks disjointness, connectivity and edge realization against the
    /// given host and pattern.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<(), EmbeddingError> {
        let k = pattern.vertex_count();
        if self.branch_sets.len() != k {
            return Err(EmbeddingError::WrongArity {
                expected: k,
                found: self.branch_sets.len(),
            });
        }
        let mut seen = 0u64;
        for (a, &set) in self.branch_sets.iter().enumerate() {
            if set == 0 {
                return Err(EmbeddingError::EmptyBranchSet(a));
            }
            if set & !host.vertex_mask() != 0 {
                return Err(EmbeddingError::OutsideHost(a));
            }
            if set & seen != 0 {
                let b = (0..a)
                    .find(|&b| self.branch_sets[b] & set != 0)
                    .expect("overlap has an earlier owner");
                return Err(EmbeddingError::Overlap(b, a));
            }
            seen |= set;
            if !host.is_connected_mask(set) {
                return Err(EmbeddingError::Disconnected(a));
            }
        }
        for (a, b) in pattern.edges() {
            let touches =
                Bits(self.branch_sets[a]).any(|v| host.neighbor_mask(v) & self.branch_sets[b] != 0);
            if !touches {
                return Err(EmbeddingError::MissingEdge(a, b));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MinorEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.branch_sets()).finish()
    }
}

/// A subdivision of the pattern inside the host: branch vertices plus one
/// host path (endpoints included) per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologicalEmbedding {
    pub branch_vertices: Vec<VertexId>,
    pub paths: Vec<(Edge, Vec<VertexId>)>,
}

impl TopologicalEmbedding {
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<(), EmbeddingError> {
        let k = pattern.vertex_count();
        if self.branch_vertices.len() != k {
            return Err(EmbeddingError::WrongArity {
                expected: k,
                found: self.branch_vertices.len(),
            });
        }
        let mut branch = 0u64;
        for &v in &self.branch_vertices {
            if v >= host.vertex_count() {
                return Err(EmbeddingError::NotInjective);
            }
            if branch >> v & 1 == 1 {
                return Err(EmbeddingError::NotInjective);
            }
            branch |= 1 << v;
        }
        let expected: Vec<Edge> = pattern.edges().collect();
        let mut got: Vec<Edge> = self.paths.iter().map(|(e, _)| *e).collect();
        got.sort_unstable();
        if got != expected {
            let missing = expected
                .iter()
                .find(|e| !got.contains(e))
                .copied()
                .unwrap_or((0, 0));
            return Err(EmbeddingError::MissingEdge(missing.0, missing.1));
        }
        let mut interiors: Vec<(Edge, u64)> = Vec::new();
        for &((a, b), ref path) in &self.paths {
            let bad = || EmbeddingError::BadPath(a, b);
            if path.len() < 2
                || path[0] != self.branch_vertices[a]
                || path[path.len() - 1] != self.branch_vertices[b]
            {
                return Err(bad());
            }
            let mut interior = 0u64;
            for w in path.windows(2) {
                if !host.has_edge(w[0], w[1]) {
                    return Err(bad());
                }
            }
            for &v in &path[1..path.len() - 1] {
                if branch >> v & 1 == 1 || interior >> v & 1 == 1 {
                    return Err(bad());
                }
                interior |= 1 << v;
            }
            if let Some(&(other, _)) = interiors.iter().find(|(_, m)| m & interior != 0) {
                return Err(EmbeddingError::PathsIntersect(other, (a, b)));
            }
            interiors.push(((a, b), interior));
        }
        Ok(())
    }

    /// The same witness as a branch-set model: each path interior joins the
    /// branch set of its first endpoint.
    pub fn to_minor_embedding(&self) -> MinorEmbedding {
        let mut sets: Vec<u64> = self.branch_vertices.iter().map(|&v| 1u64 << v).collect();
        for &((a, _), ref path) in &self.paths {
            for &v in &path[1..path.len() - 1] {
                sets[a] |= 1 << v;
            }
        }
        MinorEmbedding::from_masks(sets)
    }
}
