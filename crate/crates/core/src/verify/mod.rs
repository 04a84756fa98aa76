//! Exhaustive enumeration, obstruction search and catalog verification.

mod enumerate;
mod report;
mod search;

use thiserror::Error;

use crate::canon::CanonError;
use crate::graph::GraphError;

pub use enumerate::{
    enumerate_graphs, enumeration_level, levels, EnumerationLevel, Levels, MAX_ENUMERATION_VERTICES,
};
pub use report::{
    equivalence_check, has_connected_obstruction_shape, verify_catalog, CatalogVerifyOptions,
    CheckResult, Counterexample, VerificationReport,
};
pub use search::{
    compose_disconnected, compose_disconnected_for, excluding, is_obstruction_two_step,
    obstructions_among, search_obstructions, SearchMode,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex count {n} outside the supported range 1..={max}")]
    BadSize { n: usize, max: usize },
    #[error("class `{0}` is not flagged as minor-closed")]
    NotMinorClosed(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
