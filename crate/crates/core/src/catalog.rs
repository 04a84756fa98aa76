//! The 33 minor-minimal graphs that are not apex-pseudoforests, grouped by
//! vertex connectivity.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codec::{encode_graph6, write_dot, write_edge_list};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry named `{0}`")]
    UnknownName(String),
    #[error("unknown export format `{0}` (expected g6, dot or edges)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub connectivity_class: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionCatalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Graph6,
    Dot,
    EdgeList,
}

impl FromStr for ExportFormat {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        match s {
            "g6" | "graph6" => Ok(ExportFormat::Graph6),
            "dot" => Ok(ExportFormat::Dot),
            "edges" => Ok(ExportFormat::EdgeList),
            other => Err(CatalogError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Graph6 => "g6",
            ExportFormat::Dot => "dot",
            ExportFormat::EdgeList => "edges",
        })
    }
}

type RawEntry = (&'static str, usize, usize, &'static [(usize, usize)]);

#[rustfmt::skip]
const ENTRIES: &[RawEntry] = &[
    ("O0_1", 0, 8, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7)]),
    ("O0_2", 0, 10, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (5, 6), (5, 7), (6, 7), (7, 8), (7, 9), (8, 9)]),
    ("O0_3", 0, 9, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 5), (4, 6), (5, 6), (6, 7), (6, 8), (7, 8)]),
    ("O1_1", 1, 8, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6), (5, 7), (6, 7)]),
    ("O1_2", 1, 8, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)]),
    ("O1_3", 1, 8, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (3, 6), (4, 5), (4, 7), (5, 6), (5, 7)]),
    ("O1_4", 1, 7, &[(0, 1), (0, 6), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (5, 6)]),
    ("O1_5", 1, 7, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]),
    ("O1_6", 1, 9, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 6), (2, 7), (3, 4), (3, 5), (3, 7), (3, 8), (4, 5), (4, 6), (4, 8)]),
    ("O1_7", 1, 9, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 8), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7), (6, 8), (7, 8)]),
    ("O1_8", 1, 9, &[(0, 1), (0, 2), (1, 2), (1, 8), (2, 3), (3, 4), (3, 5), (4, 5), (4, 8), (6, 7), (6, 8), (7, 8)]),
    ("O1_9", 1, 9, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (6, 7), (6, 8), (7, 8)]),
    ("O1_10", 1, 9, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 8), (3, 4), (3, 5), (3, 8), (4, 5), (6, 7), (6, 8), (7, 8)]),
    ("O1_11", 1, 8, &[(0, 1), (0, 2), (1, 2), (1, 4), (1, 6), (1, 7), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (6, 7)]),
    ("O1_12", 1, 9, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 6), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7), (6, 8), (7, 8)]),
    ("O2_1", 2, 6, &[(0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5)]),
    ("O2_2", 2, 6, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ("O2_3", 2, 8, &[(0, 1), (0, 2), (1, 2), (1, 4), (1, 6), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (4, 6), (5, 7)]),
    ("O2_4", 2, 7, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 6), (2, 3), (4, 5), (4, 6)]),
    ("O2_5", 2, 6, &[(0, 1), (0, 4), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]),
    ("O2_6", 2, 7, &[(0, 1), (0, 5), (0, 6), (1, 5), (2, 3), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6)]),
    ("O2_7", 2, 8, &[(0, 2), (0, 3), (1, 2), (1, 6), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)]),
    ("O2_8", 2, 7, &[(0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)]),
    ("O2_9", 2, 7, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]),
    ("O2_10", 2, 8, &[(0, 1), (0, 3), (1, 2), (1, 3), (1, 5), (1, 7), (2, 5), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (5, 6)]),
    ("O2_11", 2, 9, &[(0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4), (2, 6), (2, 7), (3, 4), (3, 5), (3, 7), (3, 8), (4, 5), (4, 6), (4, 8)]),
    ("O2_12", 2, 8, &[(0, 2), (0, 3), (1, 2), (1, 6), (2, 3), (2, 6), (3, 4), (3, 7), (4, 5), (4, 7), (5, 7), (6, 7)]),
    ("O2_13", 2, 7, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 5), (2, 5), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6)]),
    ("O2_14", 2, 9, &[(0, 1), (0, 2), (1, 2), (1, 7), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (6, 7), (6, 8), (7, 8)]),
    ("O2_15", 2, 8, &[(0, 1), (0, 2), (0, 7), (1, 2), (1, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 7), (6, 7)]),
    ("O3_1", 3, 6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ("O3_2", 3, 6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
    ("O3_3", 3, 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
];

pub fn build_catalog() -> ObstructionCatalog {
    let entries = ENTRIES
        .iter()
        .map(|&(name, class, n, edges)| CatalogEntry {
            name: name.to_string(),
            connectivity_class: class,
            graph: Graph::from_edges(n, edges).expect("catalog data is well formed"),
        })
        .collect();
    ObstructionCatalog { entries }
}

impl ObstructionCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.entries.iter().map(|e| e.graph.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn class(&self, i: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries
            .iter()
            .filter(move |e| e.connectivity_class == i)
    }

    /// One block per entry in catalog order.
    pub fn export(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match format {
                ExportFormat::Graph6 => {
                    out.push_str(&encode_graph6(&e.graph));
                    out.push('\n');
                }
                ExportFormat::Dot => out.push_str(&write_dot(&e.graph, &e.name)),
                ExportFormat::EdgeList => {
                    out.push_str(&format!("# {}\n", e.name));
                    out.push_str(&write_edge_list(&e.graph));
                }
            }
        }
        out
    }
}

pub fn lookup(name: &str) -> Result<Graph, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .map(|&(_, _, n, edges)| Graph::from_edges(n, edges).expect("catalog data is well formed"))
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

pub fn export_catalog(format: ExportFormat) -> String {
    build_catalog().export(format)
}
