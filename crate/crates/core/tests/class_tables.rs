//! Per-class rows of the published automorphism tables, checked against the
//! engine's fixed-subgraph analysis.

mod common;

use std::collections::BTreeSet;

use common::tables::{check_table, tables};
use common::*;
use heawood::{Analysis, PathTag, Perm};

#[test]
fn tables_cover_the_eighteen_analyzed_graphs() {
    let names: BTreeSet<String> = tables().into_iter().map(|t| t.graph).collect();
    let want: BTreeSet<String> = heawood::catalog::REFERENCE_NAMES
        .iter()
        .filter(|n| !["K7", "C14"].contains(n))
        .map(|s| s.to_string())
        .collect();
    assert_eq!(names, want);
}

#[test]
fn every_row_matches() {
    let problems: Vec<String> = tables().iter().flat_map(check_table).collect();
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn documented_divergences_are_the_only_annotations() {
    let annotated: Vec<(String, String)> = tables()
        .into_iter()
        .flat_map(|t| {
            t.rows
                .into_iter()
                .filter(|r| r.divergence.is_some() || r.corrected_automorphism.is_some())
                .map(move |r| (t.graph.clone(), r.automorphism))
        })
        .collect();
    assert_eq!(
        annotated,
        [("H8".to_string(), "(bcd)(eg)(fh)".to_string()), ("C13".to_string(), "(cdef)(amjl)(bh)".to_string())]
    );
}

#[test]
fn h8_half_turn_square_keeps_its_booleans() {
    // The printed diagram for (eg)(fh) leaves out the two midpoints; the
    // booleans and the witness are unaffected.
    let g = graph("H8");
    let a = Analysis::new("H8", g);
    let p = Perm::parse_cycles("(eg)(fh)", g).unwrap();
    let e = a.group().index_of(&p).unwrap();
    let f = a.fixed(e);
    assert_eq!(f.midpoints.len(), 2);
    assert!(!f.embeds_in_s1());
    assert!(f.is_planar());
    assert!(matches!(a.path_tag(e), PathTag::Witness(_)));
}
