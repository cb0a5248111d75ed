//! The twenty named members of the Heawood family, built by explicit move
//! scripts from K7 on `b..h`.

use crate::canon::{are_isomorphic, canonical_form};
use crate::graph::SimpleGraph;
use crate::moves::{nabla_y, y_nabla, FamilyCatalog, FamilyMember, MoveKind, MoveRecord};

/// Member names in table order.
pub const REFERENCE_NAMES: [&str; 20] = [
    "K7", "H8", "H9", "H10", "H11", "H12", "F9", "F10", "E10", "E11", "C11", "C12", "C13", "C14",
    "N9", "N10", "N11", "N'10", "N'11", "N'12",
];

/// The members reachable from K7 by `∇Y` alone.
pub const NABLA_ONLY_NAMES: [&str; 14] = [
    "K7", "H8", "H9", "H10", "H11", "H12", "F9", "F10", "E10", "E11", "C11", "C12", "C13", "C14",
];

enum Step {
    Nabla(&'static str, [&'static str; 3], &'static str),
    Y(&'static str, &'static str),
}

/// `(name, source, move)` in construction order. C14 is handled separately.
const SCRIPT: [(&str, Step); 18] = [
    ("H8", Step::Nabla("K7", ["b", "c", "d"], "a")),
    ("H9", Step::Nabla("H8", ["e", "f", "g"], "i")),
    ("H10", Step::Nabla("H9", ["b", "e", "h"], "j")),
    ("H11", Step::Nabla("H10", ["h", "c", "f"], "k")),
    ("H12", Step::Nabla("H11", ["h", "d", "g"], "l")),
    ("F9", Step::Nabla("H8", ["d", "f", "g"], "i")),
    ("F10", Step::Nabla("F9", ["d", "e", "h"], "j")),
    ("E10", Step::Nabla("F9", ["b", "e", "f"], "j")),
    ("E11", Step::Nabla("E10", ["c", "f", "h"], "k")),
    ("C11", Step::Nabla("E10", ["c", "e", "g"], "k")),
    ("C12", Step::Nabla("C11", ["c", "f", "h"], "l")),
    ("C13", Step::Nabla("C12", ["d", "e", "h"], "m")),
    ("N11", Step::Y("H12", "h")),
    ("N10", Step::Y("N11", "i")),
    ("N9", Step::Y("N10", "a")),
    ("N'12", Step::Y("C13", "f")),
    ("N'11", Step::Y("N'12", "m")),
    ("N'10", Step::Y("N'11", "c")),
];

/// Maps `H₉`, `N′₁₀`, `Np10` and similar spellings to the ASCII name.
pub fn normalize_member_name(name: &str) -> String {
    let mut out = String::new();
    for ch in name.trim().chars() {
        match ch {
            '₀'..='₉' => out.push(char::from_digit(ch as u32 - '₀' as u32, 10).unwrap()),
            '′' | '’' => out.push('\''),
            _ => out.push(ch),
        }
    }
    if let Some(rest) = out.strip_prefix("Np") {
        out = format!("N'{rest}");
    }
    out.to_uppercase()
}

/// K7 on the vertices `b..h`.
pub fn k7() -> SimpleGraph {
    SimpleGraph::complete(["b", "c", "d", "e", "f", "g", "h"]).expect("valid labels")
}

/// Builds all twenty members. C14 is the unique result of a `∇Y` move on
/// C13 (every triangle of C13 gives the same graph up to isomorphism).
pub fn build_reference_catalog() -> FamilyCatalog {
    let mut cat = FamilyCatalog::default();
    let seed = k7();
    let canon = canonical_form(&seed);
    cat.insert(FamilyMember { name: "K7".into(), graph: seed, canon, provenance: Vec::new() });
    for (name, step) in &SCRIPT {
        let (src, kind, site, new_label, g) = match step {
            Step::Nabla(src, tri, l) => {
                let g = nabla_y(cat.graph(src).expect("source built"), *tri, l)
                    .unwrap_or_else(|e| panic!("script move for {name}: {e}"));
                (*src, MoveKind::NablaY, tri.iter().map(|s| s.to_string()).collect(), Some(l.to_string()), g)
            }
            Step::Y(src, v) => {
                let g = y_nabla(cat.graph(src).expect("source built"), v)
                    .unwrap_or_else(|e| panic!("script move for {name}: {e}"));
                (*src, MoveKind::YNabla, vec![v.to_string()], None, g)
            }
        };
        push(&mut cat, name, src, kind, site, new_label, g);
    }
    let c13 = cat.graph("C13").expect("built").clone();
    let mut c14: Option<(Vec<String>, SimpleGraph)> = None;
    for [x, y, z] in c13.triangles() {
        let tri = [c13.label(x), c13.label(y), c13.label(z)];
        let g = nabla_y(&c13, tri, "n").expect("enumerated triangle");
        match &c14 {
            None => c14 = Some((tri.iter().map(|s| s.to_string()).collect(), g)),
            Some((_, prev)) => assert!(are_isomorphic(prev, &g), "C13 has inequivalent triangles"),
        }
    }
    let (site, g) = c14.expect("C13 has a triangle");
    push(&mut cat, "C14", "C13", MoveKind::NablaY, site, Some("n".into()), g);
    cat
}

fn push(
    cat: &mut FamilyCatalog,
    name: &str,
    src: &str,
    kind: MoveKind,
    site: Vec<String>,
    new_label: Option<String>,
    g: SimpleGraph,
) {
    let source = cat.get(src).expect("source built");
    let canon = canonical_form(&g);
    let rec = MoveRecord {
        kind,
        site,
        new_label,
        source: source.canon.fingerprint.clone(),
        target: canon.fingerprint.clone(),
    };
    let mut provenance = source.provenance.clone();
    provenance.push(rec);
    cat.insert(FamilyMember { name: name.into(), graph: g, canon, provenance });
    cat.add_arrow(src, name, kind);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_normalize() {
        assert_eq!(normalize_member_name("H₉"), "H9");
        assert_eq!(normalize_member_name("N′₁₀"), "N'10");
        assert_eq!(normalize_member_name("Np12"), "N'12");
        assert_eq!(normalize_member_name("c14"), "C14");
    }

    #[test]
    fn h8_degrees() {
        let cat = build_reference_catalog();
        let d = cat.graph("H8").unwrap().degree_sequence();
        assert_eq!(d["a"], 3);
        for v in ["b", "c", "d"] {
            assert_eq!(d[v], 5);
        }
        for v in ["e", "f", "g", "h"] {
            assert_eq!(d[v], 6);
        }
    }

    #[test]
    fn every_member_has_21_edges() {
        let cat = build_reference_catalog();
        assert_eq!(cat.len(), 20);
        for name in REFERENCE_NAMES {
            assert_eq!(cat.graph(name).unwrap().size(), 21, "{name}");
        }
        assert_eq!(cat.graph("H9").unwrap().order(), 9);
    }

    #[test]
    fn n9_is_y_move_of_n10() {
        let cat = build_reference_catalog();
        let n9 = y_nabla(cat.graph("N10").unwrap(), "a").unwrap();
        assert_eq!(n9.edge_labels(), cat.graph("N9").unwrap().edge_labels());
    }
}
