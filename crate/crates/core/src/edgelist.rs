//! The edge-list text format.
//!
//! First non-comment line: `n m`. Then `m` lines `u v` with 0-indexed,
//! whitespace-separated endpoints. Lines starting with `#` and blank
//! lines are ignored. Duplicate edges — including reversed duplicates —
//! are rejected, as are self-loops and out-of-range ids. Errors carry
//! 1-based line numbers.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
}

fn parse_two(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses the edge-list format into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_two(header).ok_or(EdgeListError::BadHeader { line: header_line })?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for (line, body) in lines {
        let (u, v) = parse_two(body).ok_or(EdgeListError::BadEdge { line })?;
        for w in [u, v] {
            if w >= n {
                return Err(EdgeListError::OutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::WrongEdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges).expect("all edges validated"))
}

/// Canonical text form: header, then edges `(u, v)` with `u < v` in
/// ascending order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
