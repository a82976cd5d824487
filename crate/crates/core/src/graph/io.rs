//! Graph file formats.
//!
//! Text:
//!
//! ```text
//! # double banana
//! n 6
//! 1 2
//! 1 3
//! ...
//! ```
//!
//! The first non-comment line is `n <count>`; the vertices are `1..=count`.
//! Graphs on other label sets add a `v <label> <label> ...` line right after
//! it. Every further line is one edge `u v` with `u < v`.
//!
//! JSON: `{"vertices": [1, 2, ...], "edges": [[1, 2], ...]}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Edge, LabeledGraph, VertexId};
use crate::error::{FormatError, GraphError};

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn label(tok: &str, line: usize) -> Result<VertexId, FormatError> {
    let n: u32 = tok.parse().map_err(|_| syntax(line, format!("bad vertex label `{tok}`")))?;
    VertexId::new(n).map_err(|source| FormatError::Graph { line, source })
}

pub fn parse_text(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "empty input"))?;
    let count = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", c] => c.parse::<u32>().map_err(|_| syntax(line, "bad vertex count"))?,
        _ => return Err(syntax(line, "expected `n <count>`")),
    };
    let mut vertices: BTreeSet<VertexId> = (1..=count).map(VertexId).collect();
    if let Some(&(line, l)) = lines.peek() {
        if let Some(rest) = l.strip_prefix('v') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                lines.next();
                vertices = rest
                    .split_whitespace()
                    .map(|t| label(t, line))
                    .collect::<Result<_, _>>()?;
                if vertices.len() != count as usize {
                    return Err(syntax(
                        line,
                        format!("{} distinct labels listed, header says {count}", vertices.len()),
                    ));
                }
            }
        }
    }
    let mut edges = BTreeSet::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(syntax(line, "expected `u v`"));
        };
        let (a, b) = (label(a, line)?, label(b, line)?);
        let edge = Edge::ordered(a, b).map_err(|source| FormatError::Graph { line, source })?;
        for w in [a, b] {
            if !vertices.contains(&w) {
                return Err(FormatError::Graph { line, source: GraphError::UnknownVertex(w) });
            }
        }
        if !edges.insert(edge) {
            return Err(FormatError::Graph { line, source: GraphError::DuplicateEdge(edge) });
        }
    }
    Ok(LabeledGraph { vertices, edges })
}

pub fn to_text(g: &LabeledGraph) -> String {
    let n = g.vertex_count();
    let mut out = format!("n {n}\n");
    let contiguous = g.vertices.iter().zip(1u32..).all(|(v, i)| v.get() == i);
    if !contiguous {
        out.push('v');
        for v in &g.vertices {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    for e in &g.edges {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

impl Serialize for LabeledGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.vertices.iter().map(|v| v.get()).collect(),
            edges: self.edges.iter().map(|e| (e.u.get(), e.v.get())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        from_json_parts(raw).map_err(serde::de::Error::custom)
    }
}

fn from_json_parts(raw: GraphJson) -> Result<LabeledGraph, GraphError> {
    let mut vertices = BTreeSet::new();
    for v in raw.vertices {
        vertices.insert(VertexId::new(v)?);
    }
    let mut edges = BTreeSet::new();
    for (a, b) in raw.edges {
        let (a, b) = (VertexId::new(a)?, VertexId::new(b)?);
        let edge = Edge::ordered(a, b)?;
        for w in [a, b] {
            if !vertices.contains(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if !edges.insert(edge) {
            return Err(GraphError::DuplicateEdge(edge));
        }
    }
    Ok(LabeledGraph { vertices, edges })
}

pub fn parse_json(text: &str) -> Result<LabeledGraph, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

pub fn to_json(g: &LabeledGraph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

/// Parses either format, deciding by the first non-blank character.
pub fn parse_any(text: &str) -> Result<LabeledGraph, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}
