//! Graph interchange: graph6 (short form), a plain edge-list text format,
//! and DOT export.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// Optional header line written by nauty's `-h` flag.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error(
        "graphs with more than {MAX_VERTICES} vertices (extended graph6 header) are not supported"
    )]
    ExtendedHeader,
    #[error("graph6 string for {n} vertices needs {expected} data bytes, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonzeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected two vertex ids, got `{text}`")]
    BadLine { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// Errors from [`parse_graphs`], which accepts either format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
}

#[inline]
fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a short-form graph6 string (no trailing newline).
pub fn decode_graph6(s: &[u8]) -> Result<Graph, Graph6Error> {
    let (&first, data) = s.split_first().ok_or(Graph6Error::Empty)?;
    if let Some((offset, &byte)) = s
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    if first == 126 {
        return Err(Graph6Error::ExtendedHeader);
    }
    let n = (first - 63) as usize;
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: data.len(),
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let padding = expected * 6 - pairs;
    if padding > 0 && (data[expected - 1] - 63) & ((1u8 << padding) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn decode_graph6_str(s: &str) -> Result<Graph, Graph6Error> {
    decode_graph6(s.as_bytes())
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a header line `n <count>` followed by one
/// `i j` line per edge. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let n = {
        let mut parts = header.split_whitespace();
        match (
            parts.next(),
            parts.next().map(str::parse::<usize>),
            parts.next(),
        ) {
            (Some("n"), Some(Ok(n)), None) => n,
            (Some("n"), _, _) => {
                return Err(EdgeListError::BadHeader {
                    line: hline,
                    text: header.to_string(),
                })
            }
            _ => return Err(EdgeListError::MissingHeader),
        }
    };
    let mut g = Graph::empty(n).map_err(|_| EdgeListError::TooManyVertices(n))?;
    for (line, text) in lines {
        let mut parts = text.split_whitespace().map(str::parse::<usize>);
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
            _ => {
                return Err(EdgeListError::BadLine {
                    line,
                    text: text.to_string(),
                })
            }
        };
        g = g.add_edge(u, v).map_err(|e| match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                EdgeListError::OutOfRange { line, vertex, n }
            }
            GraphError::Loop(vertex) => EdgeListError::Loop { line, vertex },
            GraphError::DuplicateEdge(u, v) => EdgeListError::DuplicateEdge { line, u, v },
            other => unreachable!("add_edge cannot fail with {other}"),
        })?;
    }
    Ok(g)
}

/// Writes the edge-list format with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn dot_id(name: &str) -> String {
    let plain = !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !name.starts_with(|c: char| c.is_ascii_digit());
    if plain {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Undirected DOT block: one node statement per vertex, then one
/// `i -- j;` statement per edge.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_id(name));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Reads either a single edge-list block (first meaningful line starts with
/// `n`) or a stream of graph6 lines, optionally preceded by `>>graph6<<`.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, InputError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l == "n" || l.starts_with("n ") || l.starts_with("n\t") => {
            Ok(vec![parse_edge_list(text)?])
        }
        Some(_) => text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.trim();
                let l = l.strip_prefix(GRAPH6_HEADER).unwrap_or(l);
                (!l.is_empty()).then_some((i + 1, l))
            })
            .map(|(line, l)| {
                decode_graph6(l.as_bytes()).map_err(|source| InputError::Graph6 { line, source })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bit-by-bit decoder used to cross-check the codec.
    fn reference_decode(s: &str) -> Vec<(usize, usize)> {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<bool> = b[1..]
            .iter()
            .flat_map(|&c| (0..6).rev().map(move |k| ((c - 63) >> k) & 1 == 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        edges
    }

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(encode_graph6(&k4), "C~");
        assert_eq!(decode_graph6_str("C~").unwrap(), k4);
        assert_eq!(reference_decode("C~").len(), 6);
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode_graph6_str("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(decode_graph6_str("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn known_strings() {
        // nauty-produced strings for small standard graphs
        assert_eq!(encode_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(encode_graph6(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(encode_graph6(&Graph::complete(5).unwrap()), "D~{");
        for s in ["Dhc", "DQc", "Bg", "D~{", "I?h]@eOWG"] {
            let g = decode_graph6_str(s).unwrap();
            assert_eq!(g.edges().collect::<Vec<_>>(), reference_decode(s));
            assert_eq!(encode_graph6(&g), s);
        }
    }

    #[test]
    fn decode_error_kinds() {
        assert_eq!(decode_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6(b"C\x7f"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: 0x7f
            })
        );
        assert_eq!(
            decode_graph6(b" C"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 0,
                byte: b' '
            })
        );
        assert_eq!(decode_graph6(b"~?@?"), Err(Graph6Error::ExtendedHeader));
        assert_eq!(
            decode_graph6(b"C~~"),
            Err(Graph6Error::BadLength {
                n: 4,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            decode_graph6(b"D"),
            Err(Graph6Error::BadLength {
                n: 5,
                expected: 2,
                found: 0
            })
        );
        // K5 uses 10 of 12 bits; setting a padding bit must be rejected.
        assert_eq!(decode_graph6(b"D~~"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("n 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(
            write_edge_list(&parse_edge_list("n 4\n2 3\n1 0\n0 3\n").unwrap()),
            "n 4\n0 1\n0 3\n2 3\n"
        );
        assert_eq!(write_edge_list(&Graph::empty(2).unwrap()), "n 2\n");
        let g = parse_edge_list("# comment\n\nn 2\n\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingHeader));
        assert_eq!(parse_edge_list("0 1"), Err(EdgeListError::MissingHeader));
        assert!(matches!(
            parse_edge_list("n x"),
            Err(EdgeListError::BadHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0"),
            Err(EdgeListError::BadLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2"),
            Err(EdgeListError::BadLine { .. })
        ));
        assert_eq!(
            parse_edge_list("n 3\n0 1\n1 0"),
            Err(EdgeListError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse_edge_list("n 3\n2 2"),
            Err(EdgeListError::Loop { line: 2, vertex: 2 })
        );
        assert_eq!(
            parse_edge_list("n 3\n0 3"),
            Err(EdgeListError::OutOfRange {
                line: 2,
                vertex: 3,
                n: 3
            })
        );
        assert_eq!(
            parse_edge_list("n 70"),
            Err(EdgeListError::TooManyVertices(70))
        );
    }

    #[test]
    fn dot_output() {
        let dot = write_dot(&Graph::complete(3).unwrap(), "k3");
        assert!(dot.starts_with("graph k3 {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(write_dot(&Graph::empty(1).unwrap(), "O0 1").starts_with("graph \"O0 1\" {"));
    }

    #[test]
    fn sniffing_inputs() {
        assert!(parse_graphs("").unwrap().is_empty());
        assert!(parse_graphs("\n  \n").unwrap().is_empty());
        let gs = parse_graphs(">>graph6<<C~\n\n@\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(parse_graphs("n 2\n0 1\n").unwrap().len(), 1);
        assert!(matches!(
            parse_graphs("C~\nC~~\n"),
            Err(InputError::Graph6 { line: 2, .. })
        ));
        assert!(matches!(
            parse_graphs("n 2\n0 5"),
            Err(InputError::EdgeList(_))
        ));
    }
}
