//! The published per-class tables and the row-by-row comparison.

use std::collections::BTreeSet;

use heawood::{Analysis, PathTag, Perm};
use serde::Deserialize;

use super::*;

#[derive(Deserialize)]
pub struct Table {
    pub graph: String,
    pub rows: Vec<Row>,
}

#[derive(Deserialize)]
pub struct Row {
    pub automorphism: String,
    pub order: u64,
    pub s1: bool,
    pub s2: bool,
    pub path_lemma: String,
    #[serde(default)]
    pub divergence: Option<String>,
    #[serde(default)]
    pub corrected_automorphism: Option<String>,
}

pub fn tables() -> Vec<Table> {
    serde_json::from_str(include_str!("../data/class_tables.json")).unwrap()
}

/// Differences between one published table and the engine, empty when
/// every row agrees or diverges only as documented.
pub fn check_table(t: &Table) -> Vec<String> {
    let g = graph(&t.graph);
    let a = Analysis::new(&t.graph, g);
    let mut problems = Vec::new();
    let mut covered = BTreeSet::new();
    for row in &t.rows {
        let printed = Perm::parse_cycles(&row.automorphism, g).unwrap();
        let rep = match &row.corrected_automorphism {
            Some(c) => {
                if printed.is_automorphism_of(g) {
                    problems.push(format!("{}: printed row {} needs no correction", t.graph, row.automorphism));
                }
                Perm::parse_cycles(c, g).unwrap()
            }
            None => printed,
        };
        let Some(e) = a.group().index_of(&rep) else {
            problems.push(format!("{}: {} is not an automorphism", t.graph, row.automorphism));
            continue;
        };
        if !covered.insert(a.class_of(e)) {
            problems.push(format!("{}: {} repeats a class", t.graph, row.automorphism));
        }
        let f = a.fixed(e);
        let mut diff = |what: &str, ours: String, theirs: String| {
            if ours != theirs {
                problems.push(format!("{} {}: {what} {ours} vs table {theirs}", t.graph, row.automorphism));
            }
        };
        diff("order", rep.order().to_string(), row.order.to_string());
        diff("S1", f.embeds_in_s1().to_string(), row.s1.to_string());
        diff("S2", f.is_planar().to_string(), row.s2.to_string());
        let tag = a.path_tag(e);
        match (row.divergence.as_deref(), row.path_lemma.as_str()) {
            (Some("midpoints_omitted"), "N/A2") => {
                // The table counts fixed vertices only; with the flipped-edge
                // midpoints restored there are more than two points and a
                // witness exists.
                let vertices_only = f.induced_edges.is_empty() && f.fixed_count() <= 2;
                if !vertices_only || !f.more_than_two_points() {
                    problems.push(format!("{} {}: divergence does not explain N/A2", t.graph, row.automorphism));
                }
                match &tag {
                    PathTag::Witness(p) => {
                        if let Err(err) = valid_witness(g, &rep, p) {
                            problems.push(format!("{} {}: {err}", t.graph, row.automorphism));
                        }
                    }
                    other => problems.push(format!("{} {}: expected witness, got {other}", t.graph, row.automorphism)),
                }
            }
            (Some("row_inconsistent"), path) => {
                // Only the point count is in dispute: the corrected element
                // has exactly two points, and the printed path still works.
                let printed_path: Vec<String> = path.split('-').map(str::to_string).collect();
                if f.point_count() != heawood::PointCount::Finite(2) || tag != PathTag::NotApplicable2 {
                    problems.push(format!("{} {}: expected two points and N/A2, got {tag}", t.graph, row.automorphism));
                }
                if let Err(err) = valid_witness(g, &rep, &printed_path) {
                    problems.push(format!("{} {}: printed path invalid: {err}", t.graph, row.automorphism));
                }
            }
            (Some(other), _) => problems.push(format!("{}: unknown divergence {other}", t.graph)),
            (_, na) if na.starts_with("N/A") => diff("path lemma", tag.to_string(), na.to_string()),
            (_, _) => match &tag {
                PathTag::Witness(p) => {
                    if let Err(err) = valid_witness(g, &rep, p) {
                        problems.push(format!("{} {}: {err}", t.graph, row.automorphism));
                    }
                }
                other => problems.push(format!(
                    "{} {}: table gives path {}, engine {other}",
                    t.graph, row.automorphism, row.path_lemma
                )),
            },
        }
    }
    if covered.len() != a.classes().len() - 1 {
        problems.push(format!(
            "{}: table covers {} classes of {}",
            t.graph,
            covered.len(),
            a.classes().len() - 1
        ));
    }
    problems
}

