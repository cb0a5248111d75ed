//! Per-graph reports and comparison against the published bounds.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::engine::{Analysis, Chirality, Verdict};
use crate::graph::SimpleGraph;
use crate::group::GroupError;
use crate::grouptype::{identify_group_type, normalize_name};

const TABLE1: &str = include_str!("../data/table1.json");

/// One row of the published table of realizable groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaselineRow {
    pub graph: String,
    pub automorphism_group: String,
    pub positively_realizable: Vec<String>,
}

/// The embedded baseline, in table order.
pub fn baseline() -> Vec<BaselineRow> {
    serde_json::from_str(TABLE1).expect("embedded baseline parses")
}

pub fn baseline_for(graph: &str) -> Option<BaselineRow> {
    baseline().into_iter().find(|r| r.graph == graph)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Comparison {
    Match,
    Superset { excess: Vec<String> },
    Mismatch { missing: Vec<String>, excess: Vec<String> },
}

impl Comparison {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Comparison::Mismatch { .. })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Match => f.write_str("MATCH"),
            Comparison::Superset { excess } => write!(f, "SUPERSET({})", excess.join(", ")),
            Comparison::Mismatch { missing, excess } => {
                write!(f, "MISMATCH(missing: {}; excess: {})", missing.join(", "), excess.join(", "))
            }
        }
    }
}

/// Compares computed bound names with baseline names after normalizing
/// spellings; `trivial` in the baseline stands for the empty list.
pub fn compare(bounds: &[String], expected: &[String]) -> Comparison {
    let norm = |v: &[String]| -> Vec<String> {
        let mut out: Vec<String> = v
            .iter()
            .filter(|s| s.as_str() != "trivial")
            .map(|s| normalize_name(s))
            .collect();
        out.sort();
        out.dedup();
        out
    };
    let got = norm(bounds);
    let want = norm(expected);
    let missing: Vec<String> = want.iter().filter(|w| !got.contains(w)).cloned().collect();
    let excess: Vec<String> = got.iter().filter(|g| !want.contains(g)).cloned().collect();
    match (missing.is_empty(), excess.is_empty()) {
        (true, true) => Comparison::Match,
        (true, false) => Comparison::Superset { excess },
        _ => Comparison::Mismatch { missing, excess },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub representative: String,
    pub class_size: usize,
    pub order: u64,
    pub fixed_subgraph: String,
    pub points: String,
    pub s1: bool,
    pub s2: bool,
    pub path_lemma: String,
    pub pos: Verdict,
    pub neg: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutSummary {
    pub order: usize,
    pub group_type: String,
    pub class_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub automorphisms: AutSummary,
    /// One row per nontrivial conjugacy class.
    pub rows: Vec<ClassRow>,
    pub upper_bounds: Vec<String>,
    pub chirality: Chirality,
    pub chirality_surviving: Vec<String>,
    pub r7_firings: usize,
    pub baseline: Option<Vec<String>>,
    pub comparison: Option<Comparison>,
}

impl AnalysisReport {
    /// Runs the full pipeline on `g`.
    pub fn build(name: &str, g: &SimpleGraph) -> Result<Self, GroupError> {
        Self::from_analysis(&Analysis::new(name, g))
    }

    pub fn from_analysis(a: &Analysis) -> Result<Self, GroupError> {
        let g = a.graph();
        let group = a.group();
        let rows = a
            .classes()
            .iter()
            .skip(1)
            .map(|c| {
                let e = c[0];
                let pi = group.element(e);
                let f = a.fixed(e);
                let s = a.status(e);
                ClassRow {
                    representative: pi.cycle_notation(g.labels()),
                    class_size: c.len(),
                    order: pi.order(),
                    fixed_subgraph: f.summary(),
                    points: f.point_count().to_string(),
                    s1: f.embeds_in_s1(),
                    s2: f.is_planar(),
                    path_lemma: a.path_tag(e).to_string(),
                    pos: s.pos.clone(),
                    neg: s.neg.clone(),
                }
            })
            .collect();
        let upper_bounds: Vec<String> = a.positive_upper_bounds()?.iter().map(|t| t.label()).collect();
        let cert = a.intrinsically_chiral();
        let base = baseline_for(&a.name).map(|r| r.positively_realizable);
        let comparison = base.as_ref().map(|b| compare(&upper_bounds, b));
        Ok(AnalysisReport {
            graph: a.name.clone(),
            vertices: g.order(),
            edges: g.size(),
            automorphisms: AutSummary {
                order: group.order(),
                group_type: identify_group_type(group).label(),
                class_count: a.classes().len(),
            },
            rows,
            upper_bounds,
            chirality: cert.verdict,
            chirality_surviving: cert.surviving,
            r7_firings: a.r7_firings(),
            baseline: base,
            comparison,
        })
    }

    /// Aligned text tables.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {} vertices, {} edges", self.graph, self.vertices, self.edges);
        let _ = writeln!(
            out,
            "Aut: order {}, type {}, {} classes",
            self.automorphisms.order, self.automorphisms.group_type, self.automorphisms.class_count
        );
        let header = ["automorphism", "size", "order", "fixed subgraph", "S1", "S2", "path lemma", "pos", "neg"];
        let yn = |b: bool| if b { "Yes" } else { "No" }.to_string();
        let verdict = |v: &Verdict| match v {
            Verdict::Open => "open".to_string(),
            Verdict::Excluded(t) => format!("x {}", t.rule),
        };
        let body: Vec<[String; 9]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.representative.clone(),
                    r.class_size.to_string(),
                    r.order.to_string(),
                    r.fixed_subgraph.clone(),
                    yn(r.s1),
                    yn(r.s2),
                    r.path_lemma.clone(),
                    verdict(&r.pos),
                    verdict(&r.neg),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| -> String {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}", w = *w))
                .collect();
            parts.join("  ").trim_end().to_string()
        };
        out.push_str(&line(header.to_vec()));
        out.push('\n');
        for row in &body {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
            out.push('\n');
        }
        let bounds = if self.upper_bounds.is_empty() {
            "trivial only".to_string()
        } else {
            self.upper_bounds.join(", ")
        };
        let _ = writeln!(out, "positive upper bounds: {bounds}");
        let _ = write!(out, "intrinsic chirality: {:?}", self.chirality);
        if !self.chirality_surviving.is_empty() {
            let _ = write!(out, " (open: {})", self.chirality_surviving.join(", "));
        }
        out.push('\n');
        if let Some(c) = &self.comparison {
            let _ = writeln!(out, "table comparison: {c}");
        }
        out
    }
}
