//! JSON graph files.
//!
//! ```json
//! { "rank": 3, "vertices": ["v0"], "base": "v0",
//!   "edges": [{ "id": "e1", "from": "v0", "to": "v0", "length": "1/3" }, ...],
//!   "marking": ["e1", "e2", "e3"] }
//! ```
//!
//! Marking paths list edge ids separated by spaces; `~e2` traverses `e2`
//! backwards. Lengths are exact: `"n/d"`, an integer, or a finite decimal.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::graph::{DirEdge, Edge, GraphParts, MarkedMetricGraph, Violation};
use crate::error::{Error, Result};
use crate::num::parse_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub from: String,
    pub to: String,
    pub length: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub base: String,
    pub marking: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn format_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::GraphFormat { field: field.into(), message: message.into() }
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let field = e.path().to_string();
            let inner = e.into_inner();
            let at = format!("line {} column {}", inner.line(), inner.column());
            if field == "." {
                format_err(at, inner.to_string())
            } else {
                format_err(field, inner.to_string())
            }
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph files serialize");
        s.push('\n');
        s
    }

    /// Resolve ids into graph data, reporting the first malformed field.
    pub fn to_parts(&self) -> Result<GraphParts> {
        let mut vertex_index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vertex_index.insert(v.as_str(), i).is_some() {
                return Err(format_err(format!("vertices[{i}]"), format!("duplicate vertex id '{v}'")));
            }
        }
        let vertex = |field: String, id: &str| {
            vertex_index
                .get(id)
                .copied()
                .ok_or_else(|| format_err(field, format!("unknown vertex '{id}'")))
        };
        let mut edge_index = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if edge_index.insert(e.id.as_str(), i).is_some() {
                return Err(format_err(format!("edges[{i}].id"), format!("duplicate edge id '{}'", e.id)));
            }
            if e.id.is_empty() || e.id.starts_with('~') || e.id.contains(char::is_whitespace) {
                return Err(format_err(format!("edges[{i}].id"), format!("invalid edge id '{}'", e.id)));
            }
            let length = parse_rational(&e.length)
                .map_err(|err| format_err(format!("edges[{i}].length"), err.to_string()))?;
            edges.push(Edge {
                id: e.id.clone(),
                from: vertex(format!("edges[{i}].from"), &e.from)?,
                to: vertex(format!("edges[{i}].to"), &e.to)?,
                length,
            });
        }
        let base = vertex("base".into(), &self.base)?;
        let mut marking = Vec::with_capacity(self.marking.len());
        for (i, path) in self.marking.iter().enumerate() {
            let mut p = Vec::new();
            for token in path.split_whitespace() {
                let (id, reversed) = match token.strip_prefix('~') {
                    Some(id) => (id, true),
                    None => (token, false),
                };
                let edge = *edge_index
                    .get(id)
                    .ok_or_else(|| format_err(format!("marking[{i}]"), format!("unknown edge '{id}'")))?;
                p.push(DirEdge { edge, reversed });
            }
            marking.push(p);
        }
        Ok(GraphParts { rank: self.rank, vertices: self.vertices.clone(), edges, base, marking, label: self.label.clone() })
    }

    /// All invariant violations, or a single format violation if the file cannot be resolved.
    pub fn validate(&self) -> Vec<Violation> {
        match self.to_parts() {
            Ok(parts) => parts.check().0,
            Err(e) => vec![Violation { kind: super::graph::ViolationKind::Format, message: e.to_string() }],
        }
    }

    pub fn to_graph(&self) -> Result<MarkedMetricGraph> {
        MarkedMetricGraph::new(self.to_parts()?)
    }

    pub fn from_graph(g: &MarkedMetricGraph) -> Self {
        let v = g.vertices();
        GraphFile {
            rank: g.rank(),
            vertices: v.to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    from: v[e.from].clone(),
                    to: v[e.to].clone(),
                    length: e.length.to_string(),
                })
                .collect(),
            base: v[g.base()].clone(),
            marking: g
                .marking()
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|d| {
                            let id = &g.edges()[d.edge].id;
                            if d.reversed {
                                format!("~{id}")
                            } else {
                                id.clone()
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
            label: g.label().map(str::to_string),
        }
    }
}

pub fn graph_from_json(text: &str) -> Result<MarkedMetricGraph> {
    GraphFile::from_json(text)?.to_graph()
}

pub fn graph_to_json(g: &MarkedMetricGraph) -> String {
    GraphFile::from_graph(g).to_json()
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<MarkedMetricGraph> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    graph_from_json(&text)
}

pub fn save_graph(g: &MarkedMetricGraph, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), graph_to_json(g))
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))
}
