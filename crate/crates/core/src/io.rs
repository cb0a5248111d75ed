//! Graph files: one JSON object per file,
//! `{ "name": ..., "vertices": [...], "edges": [[u, v], ...] }`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{context}: malformed graph file at line {line}, column {column}: {message}")]
    Syntax {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: edge #{index} {pair}: {source}")]
    Edge {
        context: String,
        index: usize,
        pair: String,
        #[source]
        source: GraphError,
    },
    #[error("{context}: {source}")]
    Graph {
        context: String,
        #[source]
        source: GraphError,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRecord {
    name: String,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// A graph together with the name stored in its file.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: SimpleGraph,
}

/// Parses graph-file text. `context` names the source in diagnostics.
pub fn parse_graph(text: &str, context: &str) -> Result<NamedGraph, GraphFileError> {
    let record: GraphRecord = serde_json::from_str(text).map_err(|e| GraphFileError::Syntax {
        context: context.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut graph = SimpleGraph::with_vertices(record.vertices.iter().cloned()).map_err(|source| {
        GraphFileError::Graph {
            context: context.to_string(),
            source,
        }
    })?;
    for (index, (a, b)) in record.edges.iter().enumerate() {
        let pair = format!("[{a}, {b}]");
        let err = |source| GraphFileError::Edge {
            context: context.to_string(),
            index,
            pair: pair.clone(),
            source,
        };
        let i = graph
            .index_of(a)
            .ok_or_else(|| err(GraphError::UnknownLabel(a.clone())))?;
        let j = graph
            .index_of(b)
            .ok_or_else(|| err(GraphError::UnknownLabel(b.clone())))?;
        if i == j {
            return Err(err(GraphError::Loop(a.clone())));
        }
        if graph.has_edge(i, j) {
            return Err(err(GraphError::MultiEdge(a.clone(), b.clone())));
        }
        graph.add_edge(i, j);
    }
    Ok(NamedGraph {
        name: record.name,
        graph,
    })
}

pub fn read_graph_file(path: &Path) -> Result<NamedGraph, GraphFileError> {
    let text = fs::read_to_string(path).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text, &path.display().to_string())
}

/// Emits the graph-file text: keys in `name, vertices, edges` order, edges
/// in vertex-index order, pretty printed with a trailing newline.
pub fn emit_graph(name: &str, g: &SimpleGraph) -> String {
    let record = GraphRecord {
        name: name.to_string(),
        vertices: g.labels().to_vec(),
        edges: g.edge_labels(),
    };
    let mut text = serde_json::to_string_pretty(&record).expect("graph record serializes");
    text.push('\n');
    text
}

pub fn write_graph_file(path: &Path, name: &str, g: &SimpleGraph) -> Result<(), GraphFileError> {
    fs::write(path, emit_graph(name, g)).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })
}
