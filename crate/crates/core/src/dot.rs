//! Graphviz output for single graphs and for move families.

use std::fmt::Write as _;

use crate::graph::SimpleGraph;
use crate::moves::{FamilyCatalog, MoveKind};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected rendering with vertices and edges in index order.
pub fn graph_dot(name: &str, g: &SimpleGraph) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
    }
    out.push_str("}\n");
    out
}

/// Members as nodes ranked by vertex count, `∇Y` moves as arrows.
pub fn family_dot(name: &str, cat: &FamilyCatalog) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=TB;\n", quote(name));
    let mut members: Vec<_> = cat.members().iter().collect();
    members.sort_by(|a, b| a.graph.order().cmp(&b.graph.order()).then(a.name.cmp(&b.name)));
    let mut rank = None;
    for m in &members {
        let n = m.graph.order();
        if rank != Some(n) {
            if rank.is_some() {
                out.push_str("  }\n");
            }
            let _ = writeln!(out, "  {{ rank=same;");
            rank = Some(n);
        }
        let _ = writeln!(out, "    {};", quote(&m.name));
    }
    if rank.is_some() {
        out.push_str("  }\n");
    }
    for arrow in cat.arrows().iter().filter(|a| a.kind == MoveKind::NablaY) {
        let _ = writeln!(out, "  {} -> {};", quote(&arrow.from), quote(&arrow.to));
    }
    out.push_str("}\n");
    out
}
