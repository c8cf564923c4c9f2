use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::graph::ExplicitGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Graph6,
    EdgeList,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            other => Err(Error::Unsupported { kind: "format", name: other.to_string() }),
        }
    }
}

/// Serializes `graph`; the output is a pure function of the graph.
pub fn export(graph: &ExplicitGraph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(graph),
        Format::Graph6 => {
            let mut s = to_graph6(graph);
            s.push('\n');
            s
        }
        Format::EdgeList => to_edge_list(graph),
        Format::Json => to_json(graph),
    }
}

fn to_dot(graph: &ExplicitGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", graph.label(v));
    }
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

fn to_edge_list(graph: &ExplicitGraph) -> String {
    let mut out = String::new();
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertex_count: usize,
    n: Option<usize>,
    k: Option<usize>,
    edges: &'a [(usize, usize)],
}

fn to_json(graph: &ExplicitGraph) -> String {
    let shape = graph.shape();
    let doc = JsonGraph {
        vertex_count: graph.vertex_count(),
        n: shape.map(|s| s.0),
        k: shape.map(|s| s.1),
        edges: graph.edges(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Standard graph6 encoding without header or trailing newline: the vertex
/// count, then the upper triangle column by column (`x(i,j)`, `i < j`,
/// ordered by `j` then `i`) packed six bits per byte, each byte offset by 63.
pub fn to_graph6(graph: &ExplicitGraph) -> String {
    let n = graph.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.extend((0..3).rev().map(|t| ((n >> (6 * t)) & 63) as u8 + 63));
    } else {
        bytes.extend([126, 126]);
        bytes.extend((0..6).rev().map(|t| ((n >> (6 * t)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<ExplicitGraph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes: Vec<u8> = text.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 byte outside 63..=126"));
    }
    let sextet = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes.as_slice() {
        [126, 126, tail @ ..] if tail.len() >= 6 => {
            (tail[..6].iter().fold(0, |acc, &b| acc << 6 | sextet(b)), &tail[6..])
        }
        [126, tail @ ..] if tail.len() >= 3 => {
            (tail[..3].iter().fold(0, |acc, &b| acc << 6 | sextet(b)), &tail[3..])
        }
        [b, tail @ ..] if *b != 126 => (sextet(*b), tail),
        _ => return Err(parse_err(1, "truncated graph6 size header")),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(1, format!("expected {needed} data bytes, found {}", rest.len())));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if sextet(rest[bit / 6]) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    ExplicitGraph::from_edges(n, &edges)
}

/// Parses `a b` lines over 0-based indices. Without `vertex_count` the order
/// is one more than the largest index seen.
pub fn from_edge_list(text: &str, vertex_count: Option<usize>) -> Result<ExplicitGraph> {
    let mut edges = Vec::new();
    for (lno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => edges.push((a, b)),
            _ => return Err(parse_err(lno + 1, "expected `<a> <b>`")),
        }
    }
    let n = vertex_count
        .unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    ExplicitGraph::from_edges(n, &edges)
}
