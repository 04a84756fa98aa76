//! Recognition, minor testing, decomposition and obstruction search for
//! pseudoforests and apex-pseudoforests on small graphs.

pub mod canon;
pub mod catalog;
pub mod codec;
pub mod decomposition;
pub mod graph;
pub mod minors;
pub mod recognition;
pub mod verify;

pub use canon::{canonical_form, isomorphic, CanonicalForm};
pub use catalog::{build_catalog, lookup, ObstructionCatalog};
pub use codec::{decode_graph6, encode_graph6, parse_edge_list, parse_graphs};
pub use graph::{Graph, GraphError, VertexId};
pub use minors::{contains_any_minor, contains_minor, is_obstruction, MinorEmbedding};
pub use recognition::{apex_vertex, is_apex_pseudoforest, is_pseudoforest, ClassPredicate};
