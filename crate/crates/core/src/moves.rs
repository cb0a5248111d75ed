//! Triangle-to-star moves and closure enumeration.
//!
//! `nabla_y` replaces the three edges of a triangle by a new vertex joined to
//! its corners; `y_nabla` undoes it. Both keep the edge count fixed, which is
//! what bounds the closure.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{full_mask, iter_mask, GraphError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0}, {1}, {2} do not form a triangle")]
    NotATriangle(String, String, String),
    #[error("vertex `{0}` has degree {1}, not 3")]
    NotDegreeThree(String, usize),
    #[error("neighbors `{0}` and `{1}` of the removed vertex are adjacent")]
    AdjacentNeighbors(String, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "nabla_y")]
    NablaY,
    #[serde(rename = "y_nabla")]
    YNabla,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::NablaY => "∇Y",
            MoveKind::YNabla => "Y∇",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    /// Three triangle labels, or the single removed vertex.
    pub site: Vec<String>,
    /// Label of the added vertex (`∇Y` only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub new_label: Option<String>,
    pub source: String,
    pub target: String,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.new_label {
            Some(l) => write!(f, "{} {} -> {}", self.kind, self.site.concat(), l),
            None => write!(f, "{} {}", self.kind, self.site.concat()),
        }
    }
}

/// `g` with triangle `tri` replaced by a new vertex `new_label`.
pub fn nabla_y(g: &SimpleGraph, tri: [&str; 3], new_label: &str) -> Result<SimpleGraph, MoveError> {
    let mut idx = [0usize; 3];
    for (k, l) in tri.iter().enumerate() {
        idx[k] = g
            .index_of(l)
            .ok_or_else(|| GraphError::UnknownLabel(l.to_string()))?;
    }
    let [x, y, z] = idx;
    if x == y || y == z || x == z || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z) {
        return Err(MoveError::NotATriangle(tri[0].into(), tri[1].into(), tri[2].into()));
    }
    let mut out = g.clone();
    out.remove_edge(x, y);
    out.remove_edge(y, z);
    out.remove_edge(x, z);
    out.push_vertex(new_label.to_string(), (1 << x) | (1 << y) | (1 << z))?;
    Ok(out)
}

/// `g` with degree-3 vertex `v` removed and its neighbors joined pairwise.
pub fn y_nabla(g: &SimpleGraph, v: &str) -> Result<SimpleGraph, MoveError> {
    let i = g
        .index_of(v)
        .ok_or_else(|| GraphError::UnknownLabel(v.to_string()))?;
    if g.degree(i) != 3 {
        return Err(MoveError::NotDegreeThree(v.to_string(), g.degree(i)));
    }
    let nb: Vec<usize> = iter_mask(g.neighbors(i)).collect();
    for (p, &a) in nb.iter().enumerate() {
        for &b in &nb[p + 1..] {
            if g.has_edge(a, b) {
                return Err(MoveError::AdjacentNeighbors(g.label(a).into(), g.label(b).into()));
            }
        }
    }
    let mut out = g.induced_by_mask(full_mask(g.order()) & !(1 << i));
    let shift = |j: usize| if j > i { j - 1 } else { j };
    for (p, &a) in nb.iter().enumerate() {
        for &b in &nb[p + 1..] {
            out.add_edge(shift(a), shift(b));
        }
    }
    Ok(out)
}

/// Vertices where `y_nabla` is legal.
pub fn y_sites(g: &SimpleGraph) -> Vec<usize> {
    (0..g.order())
        .filter(|&i| {
            g.degree(i) == 3 && {
                let nb: Vec<usize> = iter_mask(g.neighbors(i)).collect();
                !g.has_edge(nb[0], nb[1]) && !g.has_edge(nb[0], nb[2]) && !g.has_edge(nb[1], nb[2])
            }
        })
        .collect()
}

/// First unused single lowercase letter, else `v{n}`.
pub fn fresh_label(g: &SimpleGraph) -> String {
    ('a'..='z')
        .map(String::from)
        .find(|l| !g.contains_label(l))
        .unwrap_or_else(|| {
            (g.order()..)
                .map(|n| format!("v{n}"))
                .find(|l| !g.contains_label(l))
                .expect("some label is free")
        })
}

/// All single moves from `g`, as (record without fingerprints, result).
fn successors(g: &SimpleGraph, nabla_only: bool) -> Vec<(MoveRecord, SimpleGraph)> {
    let mut out = Vec::new();
    let label = fresh_label(g);
    for [x, y, z] in g.triangles() {
        let tri = [g.label(x), g.label(y), g.label(z)];
        let h = nabla_y(g, tri, &label).expect("enumerated triangle");
        let rec = MoveRecord {
            kind: MoveKind::NablaY,
            site: tri.iter().map(|s| s.to_string()).collect(),
            new_label: Some(label.clone()),
            source: String::new(),
            target: String::new(),
        };
        out.push((rec, h));
    }
    if !nabla_only {
        for v in y_sites(g) {
            let h = y_nabla(g, g.label(v)).expect("enumerated site");
            let rec = MoveRecord {
                kind: MoveKind::YNabla,
                site: vec![g.label(v).to_string()],
                new_label: None,
                source: String::new(),
                target: String::new(),
            };
            out.push((rec, h));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyMember {
    pub name: String,
    #[serde(skip)]
    pub graph: SimpleGraph,
    #[serde(skip)]
    pub canon: CanonicalForm,
    /// Moves leading from the seed to this member.
    pub provenance: Vec<MoveRecord>,
}

impl FamilyMember {
    pub fn fingerprint(&self) -> &str {
        &self.canon.fingerprint
    }
}

/// One move between two members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyArrow {
    pub from: String,
    pub to: String,
    pub kind: MoveKind,
}

/// Named members of a move-closed family, in discovery order.
#[derive(Debug, Clone, Default)]
pub struct FamilyCatalog {
    members: Vec<FamilyMember>,
    by_name: HashMap<String, usize>,
    by_fingerprint: HashMap<String, usize>,
    arrows: BTreeSet<FamilyArrow>,
}

impl FamilyCatalog {
    pub(crate) fn insert(&mut self, member: FamilyMember) -> usize {
        let id = self.members.len();
        assert!(
            self.by_name.insert(member.name.clone(), id).is_none(),
            "duplicate member name {}",
            member.name
        );
        assert!(
            self.by_fingerprint.insert(member.canon.fingerprint.clone(), id).is_none(),
            "{} duplicates an existing member",
            member.name
        );
        self.members.push(member);
        id
    }

    pub(crate) fn add_arrow(&mut self, from: &str, to: &str, kind: MoveKind) {
        self.arrows.insert(FamilyArrow { from: from.into(), to: to.into(), kind });
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn names(&self) -> Vec<&str> {
        self.members.iter().map(|m| m.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&FamilyMember> {
        self.by_name.get(name).map(|&i| &self.members[i])
    }

    pub fn graph(&self, name: &str) -> Option<&SimpleGraph> {
        self.get(name).map(|m| &m.graph)
    }

    pub fn by_fingerprint(&self, fp: &str) -> Option<&FamilyMember> {
        self.by_fingerprint.get(fp).map(|&i| &self.members[i])
    }

    pub fn arrows(&self) -> &BTreeSet<FamilyArrow> {
        &self.arrows
    }

    /// Member count per vertex count.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for m in &self.members {
            *h.entry(m.graph.order()).or_insert(0) += 1;
        }
        h
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosureOptions {
    /// Only apply `∇Y`.
    pub nabla_only: bool,
    /// Shuffle each frontier expansion with this seed.
    pub shuffle_seed: Option<u64>,
}

/// Breadth-first closure of `seed` under both moves.
pub fn closure(seed: &SimpleGraph, hints: Option<&FamilyCatalog>) -> FamilyCatalog {
    closure_with(seed, hints, ClosureOptions::default())
}

/// Breadth-first closure, deduplicated by canonical form. Members are named
/// after the isomorphic hint member when one exists, else `G{n}_{k}` in
/// discovery order among `n`-vertex members.
pub fn closure_with(seed: &SimpleGraph, hints: Option<&FamilyCatalog>, opts: ClosureOptions) -> FamilyCatalog {
    let mut rng = opts.shuffle_seed.map(StdRng::seed_from_u64);
    let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
    let mut name_for = |g: &SimpleGraph, canon: &CanonicalForm| -> String {
        if let Some(m) = hints.and_then(|h| h.by_fingerprint(&canon.fingerprint)) {
            return m.name.clone();
        }
        let k = per_order.entry(g.order()).or_insert(0);
        *k += 1;
        format!("G{}_{}", g.order(), k)
    };
    let mut cat = FamilyCatalog::default();
    let canon = canonical_form(seed);
    let name = name_for(seed, &canon);
    cat.insert(FamilyMember { name, graph: seed.clone(), canon, provenance: Vec::new() });
    let edge_count = seed.size();
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let (src_name, src_fp, src_graph, src_prov) = {
            let m = &cat.members[id];
            (m.name.clone(), m.canon.fingerprint.clone(), m.graph.clone(), m.provenance.clone())
        };
        let mut succ = successors(&src_graph, opts.nabla_only);
        if let Some(r) = rng.as_mut() {
            succ.shuffle(r);
        }
        for (mut rec, h) in succ {
            assert_eq!(h.size(), edge_count, "moves preserve the edge count");
            let canon = canonical_form(&h);
            rec.source = src_fp.clone();
            rec.target = canon.fingerprint.clone();
            let target_name = match cat.by_fingerprint.get(&canon.fingerprint) {
                Some(&t) => cat.members[t].name.clone(),
                None => {
                    let name = name_for(&h, &canon);
                    let mut provenance = src_prov.clone();
                    provenance.push(rec.clone());
                    let t = cat.insert(FamilyMember { name: name.clone(), graph: h, canon, provenance });
                    queue.push_back(t);
                    name
                }
            };
            cat.add_arrow(&src_name, &target_name, rec.kind);
        }
    }
    cat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn k(n: usize) -> SimpleGraph {
        SimpleGraph::complete((0..n).map(|i| ((b'a' + i as u8) as char).to_string())).unwrap()
    }

    #[test]
    fn nabla_on_k4() {
        let g = nabla_y(&k(4), ["a", "b", "c"], "x").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 6);
        let deg = g.degree_sequence();
        assert_eq!(deg["x"], 3);
        assert_eq!(deg["a"], 2);
        assert_eq!(deg["d"], 3);
    }

    #[test]
    fn errors() {
        let g = nabla_y(&k(4), ["a", "b", "c"], "x").unwrap();
        assert!(matches!(nabla_y(&g, ["a", "b", "c"], "y"), Err(MoveError::NotATriangle(..))));
        assert!(matches!(nabla_y(&k(4), ["a", "b", "c"], "d"), Err(MoveError::Graph(GraphError::DuplicateLabel(_)))));
        assert!(matches!(y_nabla(&k(5), "a"), Err(MoveError::NotDegreeThree(_, 4))));
        assert!(matches!(y_nabla(&k(4), "a"), Err(MoveError::AdjacentNeighbors(..))));
    }

    #[test]
    fn inverse_moves() {
        let g = k(5);
        let h = nabla_y(&g, ["a", "c", "e"], "z").unwrap();
        let back = y_nabla(&h, "z").unwrap();
        assert!(are_isomorphic(&back, &g));
        assert_eq!(back.edge_labels(), g.edge_labels());
    }

    #[test]
    fn fresh_labels() {
        let g = SimpleGraph::complete(["b", "c", "d"]).unwrap();
        assert_eq!(fresh_label(&g), "a");
        assert_eq!(fresh_label(&k(3)), "d");
    }

    #[test]
    fn petersen_family_has_seven() {
        let cat = closure(&k(6), None);
        assert_eq!(cat.len(), 7);
        assert!(cat.members().iter().all(|m| m.graph.size() == 15));
        assert_eq!(cat.histogram().get(&10), Some(&1));
    }

    #[test]
    fn provenance_replays() {
        let cat = closure(&k(6), None);
        for m in cat.members() {
            let mut g = k(6);
            for rec in &m.provenance {
                g = match rec.kind {
                    MoveKind::NablaY => {
                        let s: Vec<&str> = rec.site.iter().map(String::as_str).collect();
                        nabla_y(&g, [s[0], s[1], s[2]], rec.new_label.as_deref().unwrap()).unwrap()
                    }
                    MoveKind::YNabla => y_nabla(&g, &rec.site[0]).unwrap(),
                };
            }
            assert!(are_isomorphic(&g, &m.graph), "{}", m.name);
        }
    }
}
