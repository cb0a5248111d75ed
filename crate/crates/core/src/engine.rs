//! Exclusion rules for automorphisms and their fixpoint.
//!
//! Each automorphism carries two verdicts, one for orientation-preserving
//! realization (`pos`) and one for orientation-reversing realization
//! (`neg`). A verdict starts `Open` and can only move to `Excluded`, carrying
//! the trace of the rule that fired. Rules:
//!
//! * R1: `F` does not embed in S1 excludes `pos`.
//! * R2: `F` nonplanar excludes `pos` and `neg`.
//! * R3: odd order excludes `neg`.
//! * R4: more than two points in `F` and order other than 2 excludes `neg`.
//! * R5: a path between two interchanged vertices avoiding fixed vertices
//!   and flipped edges, with more than two points in `F`, excludes `neg`.
//! * R6: for `k >= 2` with `π^k ≠ id`: (a) `π^k` pos-excluded excludes
//!   `pos`; (b) odd `k` and `π^k` neg-excluded excludes `neg`; (c) even `k`
//!   and `π^k` pos-excluded excludes `neg`.
//! * R7: a conjugate with an exclusion passes it on.
//! * R9: with `F` nonempty, a power `π^k ≠ id` that fixes a vertex `π` moves,
//!   or flips an edge `π` does not map to itself, excludes `pos`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::autom::automorphism_group;
use crate::fixedsub::{fixed_subgraph_unchecked, FixedSubgraph};
use crate::graph::{iter_mask, SimpleGraph};
use crate::group::{GroupError, PermGroup};
use crate::grouptype::{identify_group_type, GroupType};
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6a,
    R6b,
    R6c,
    R7,
    R9,
}

impl RuleId {
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::R1 => "fixed subgraph does not embed in S1",
            RuleId::R2 => "fixed subgraph is nonplanar",
            RuleId::R3 => "odd order",
            RuleId::R4 => "more than two fixed points and order other than 2",
            RuleId::R5 => "path between interchanged vertices avoids fixed vertices and flipped edges",
            RuleId::R6a => "a power is not positively realizable",
            RuleId::R6b => "an odd power is not negatively realizable",
            RuleId::R6c => "an even power is not positively realizable; a realizing map squared to that power would preserve orientation",
            RuleId::R7 => "conjugate to an excluded automorphism",
            RuleId::R9 => "a power fixes a point the automorphism moves, contradicting a circle of fixed points",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Pos,
    Neg,
}

/// Data that lets a rule be re-evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// R1, R2: the summary of `F`.
    FixedSubgraph { summary: String },
    /// R3, R4.
    Order { order: u64, points: String },
    /// R5: vertex labels from one interchanged vertex to its partner.
    Path { path: Vec<String> },
    /// R6: the power `π^k`, given by element index and cycle notation.
    Power { k: u64, element: usize, notation: String },
    /// R7: an excluded conjugate.
    Conjugate { element: usize, notation: String },
    /// R9 (i): a vertex fixed by `π^k` but moved by `π`.
    AxisVertex { k: u64, vertex: String },
    /// R9 (ii): an edge flipped by `π^k` that `π` does not map to itself.
    AxisEdge { k: u64, edge: (String, String) },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleTrace {
    pub rule: RuleId,
    pub witness: Witness,
    pub citation: String,
    /// Position in the global exclusion order; cited exclusions have
    /// smaller steps.
    pub step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Open,
    Excluded(RuleTrace),
}

impl Verdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, Verdict::Excluded(_))
    }

    pub fn trace(&self) -> Option<&RuleTrace> {
        match self {
            Verdict::Excluded(t) => Some(t),
            Verdict::Open => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementStatus {
    pub pos: Verdict,
    pub neg: Verdict,
}

impl ElementStatus {
    fn open() -> Self {
        ElementStatus { pos: Verdict::Open, neg: Verdict::Open }
    }

    pub fn get(&self, p: Polarity) -> &Verdict {
        match p {
            Polarity::Pos => &self.pos,
            Polarity::Neg => &self.neg,
        }
    }

    fn get_mut(&mut self, p: Polarity) -> &mut Verdict {
        match p {
            Polarity::Pos => &mut self.pos,
            Polarity::Neg => &mut self.neg,
        }
    }
}

/// Path Lemma applicability for one automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathTag {
    /// `F` is nonplanar.
    NotApplicable3,
    /// No pair of vertices is interchanged.
    NotApplicable1,
    /// Two or fewer points in `F`.
    NotApplicable2,
    Witness(Vec<String>),
    /// Applicable but no path exists.
    NoPath,
}

impl fmt::Display for PathTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathTag::NotApplicable1 => f.write_str("N/A1"),
            PathTag::NotApplicable2 => f.write_str("N/A2"),
            PathTag::NotApplicable3 => f.write_str("N/A3"),
            PathTag::Witness(p) => f.write_str(&p.join("-")),
            PathTag::NoPath => f.write_str("none"),
        }
    }
}

/// Whether `(u, v)` is an edge whose endpoints `pi` interchanges.
fn flips(pi: &Perm, u: usize, v: usize) -> bool {
    pi.image(u) == v && pi.image(v) == u
}

/// Shortest path from `a` to `pi(a)` with unfixed interior and no flipped
/// edge. Neighbors are explored in index order, so the result is
/// deterministic.
pub fn path_witness(g: &SimpleGraph, pi: &Perm, a: usize) -> Option<Vec<usize>> {
    let b = pi.image(a);
    let fixed = pi.fixed_mask();
    let mut prev = vec![usize::MAX; g.order()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for w in iter_mask(g.neighbors(u)) {
            if prev[w] != usize::MAX || flips(pi, u, w) {
                continue;
            }
            if w == b {
                let mut path = vec![b, u];
                let mut x = u;
                while x != a {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            if fixed & (1 << w) != 0 {
                continue;
            }
            prev[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// Interchanged pairs `(a, b)` with `a < b`.
fn swapped_pairs(pi: &Perm) -> Vec<(usize, usize)> {
    (0..pi.degree())
        .filter_map(|a| {
            let b = pi.image(a);
            (a < b && pi.image(b) == a).then_some((a, b))
        })
        .collect()
}

/// The first witness over interchanged pairs in index order.
fn first_path(g: &SimpleGraph, pi: &Perm) -> Option<Vec<usize>> {
    swapped_pairs(pi)
        .into_iter()
        .find_map(|(a, _)| path_witness(g, pi, a))
}

/// The Path Lemma column: N/A3, then N/A1, then N/A2, then a witness.
pub fn path_tag(g: &SimpleGraph, pi: &Perm, f: &FixedSubgraph) -> PathTag {
    if !f.is_planar() {
        PathTag::NotApplicable3
    } else if swapped_pairs(pi).is_empty() {
        PathTag::NotApplicable1
    } else if !f.more_than_two_points() {
        PathTag::NotApplicable2
    } else {
        match first_path(g, pi) {
            Some(p) => PathTag::Witness(p.iter().map(|&i| g.label(i).to_string()).collect()),
            None => PathTag::NoPath,
        }
    }
}

/// Direct rules in their default evaluation order.
const DIRECT_RULES: [RuleId; 6] = [RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5, RuleId::R9];

/// Evaluates a direct rule on `pi`, returning the polarities it excludes.
fn eval_direct(rule: RuleId, g: &SimpleGraph, pi: &Perm, f: &FixedSubgraph) -> Option<(Vec<Polarity>, Witness)> {
    let points = f.point_count().to_string();
    match rule {
        RuleId::R1 => (!f.embeds_in_s1())
            .then(|| (vec![Polarity::Pos], Witness::FixedSubgraph { summary: f.summary() })),
        RuleId::R2 => (!f.is_planar())
            .then(|| (vec![Polarity::Pos, Polarity::Neg], Witness::FixedSubgraph { summary: f.summary() })),
        RuleId::R3 => (pi.order() % 2 == 1)
            .then(|| (vec![Polarity::Neg], Witness::Order { order: pi.order(), points })),
        RuleId::R4 => (f.more_than_two_points() && pi.order() != 2)
            .then(|| (vec![Polarity::Neg], Witness::Order { order: pi.order(), points })),
        RuleId::R5 => {
            if !f.more_than_two_points() {
                return None;
            }
            first_path(g, pi).map(|p| {
                let path = p.iter().map(|&i| g.label(i).to_string()).collect();
                (vec![Polarity::Neg], Witness::Path { path })
            })
        }
        RuleId::R9 => axis_witness(g, pi, f).map(|w| (vec![Polarity::Pos], w)),
        _ => None,
    }
}

fn axis_witness(g: &SimpleGraph, pi: &Perm, f: &FixedSubgraph) -> Option<Witness> {
    if f.is_empty() {
        return None;
    }
    let own = pi.fixed_mask();
    let edges = g.edges();
    for k in 2..pi.order() {
        let p = pi.power(k as i64);
        let extra = p.fixed_mask() & !own;
        if extra != 0 {
            let v = extra.trailing_zeros() as usize;
            return Some(Witness::AxisVertex { k, vertex: g.label(v).to_string() });
        }
        for &(u, v) in &edges {
            if flips(&p, u, v) && !(flips(pi, u, v) || (pi.image(u) == u && pi.image(v) == v)) {
                return Some(Witness::AxisEdge {
                    k,
                    edge: (g.label(u).to_string(), g.label(v).to_string()),
                });
            }
        }
    }
    None
}

/// Order of rule application within a fixpoint run.
#[derive(Debug, Clone, Copy, Default)]
pub struct Schedule {
    /// Shuffles element order and direct-rule order when set.
    pub seed: Option<u64>,
}

/// Statuses of every automorphism of one graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub name: String,
    graph: SimpleGraph,
    group: PermGroup,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    fixed: Vec<FixedSubgraph>,
    statuses: Vec<ElementStatus>,
    r7_firings: usize,
    steps: usize,
}

impl Analysis {
    /// Computes `Aut(g)` and runs the fixpoint with the default schedule.
    pub fn new(name: &str, g: &SimpleGraph) -> Self {
        Self::with_schedule(name, g, Schedule::default())
    }

    pub fn with_schedule(name: &str, g: &SimpleGraph, schedule: Schedule) -> Self {
        let group = automorphism_group(g);
        Self::from_group(name, g, group, schedule)
    }

    /// Runs the fixpoint over a precomputed automorphism group.
    pub fn from_group(name: &str, g: &SimpleGraph, group: PermGroup, schedule: Schedule) -> Self {
        let classes = group.conjugacy_classes();
        let mut class_of = vec![0; group.order()];
        for (c, members) in classes.iter().enumerate() {
            for &e in members {
                class_of[e] = c;
            }
        }
        let fixed = group.elements().iter().map(|p| fixed_subgraph_unchecked(g, p)).collect();
        let statuses = vec![ElementStatus::open(); group.order()];
        let mut a = Analysis {
            name: name.to_string(),
            graph: g.clone(),
            group,
            classes,
            class_of,
            fixed,
            statuses,
            r7_firings: 0,
            steps: 0,
        };
        a.fixpoint(schedule);
        a
    }

    fn exclude(&mut self, e: usize, pol: Polarity, rule: RuleId, witness: Witness) -> bool {
        if e == 0 || self.statuses[e].get(pol).is_excluded() {
            return false;
        }
        self.steps += 1;
        *self.statuses[e].get_mut(pol) = Verdict::Excluded(RuleTrace {
            rule,
            witness,
            citation: rule.citation().to_string(),
            step: self.steps,
        });
        true
    }

    fn fixpoint(&mut self, schedule: Schedule) {
        let n = self.group.order();
        let mut order: Vec<usize> = (1..n).collect();
        let mut rules = DIRECT_RULES.to_vec();
        if let Some(seed) = schedule.seed {
            let mut rng = StdRng::seed_from_u64(seed);
            order.shuffle(&mut rng);
            rules.shuffle(&mut rng);
        }
        for &e in &order {
            for &rule in &rules {
                let pi = self.group.element(e);
                if let Some((pols, w)) = eval_direct(rule, &self.graph, pi, &self.fixed[e]) {
                    for pol in pols {
                        self.exclude(e, pol, rule, w.clone());
                    }
                }
            }
        }
        let powers: Vec<Vec<usize>> = (0..n).map(|e| self.power_indices(e)).collect();
        loop {
            let mut changed = false;
            loop {
                let mut round = false;
                for &e in &order {
                    round |= self.apply_r6(e, &powers[e]);
                }
                if !round {
                    break;
                }
                changed = true;
            }
            if self.apply_r7() {
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }

    /// `powers[k]` is the index of `π^k` for `k` in `0..order`.
    fn power_indices(&self, e: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut cur = e;
        while cur != 0 {
            out.push(cur);
            cur = self.group.mul(cur, e);
        }
        out
    }

    fn apply_r6(&mut self, e: usize, powers: &[usize]) -> bool {
        let mut changed = false;
        for (k, &p) in powers.iter().enumerate().skip(2) {
            let k = k as u64;
            let pos_ex = self.statuses[p].pos.is_excluded();
            let neg_ex = self.statuses[p].neg.is_excluded();
            if pos_ex && !self.statuses[e].pos.is_excluded() {
                let w = Witness::Power { k, element: p, notation: self.notation(p) };
                changed |= self.exclude(e, Polarity::Pos, RuleId::R6a, w);
            }
            if !self.statuses[e].neg.is_excluded() {
                if k % 2 == 1 && neg_ex {
                    let w = Witness::Power { k, element: p, notation: self.notation(p) };
                    changed |= self.exclude(e, Polarity::Neg, RuleId::R6b, w);
                } else if k % 2 == 0 && pos_ex {
                    let w = Witness::Power { k, element: p, notation: self.notation(p) };
                    changed |= self.exclude(e, Polarity::Neg, RuleId::R6c, w);
                }
            }
        }
        changed
    }

    fn notation(&self, e: usize) -> String {
        self.group.element(e).cycle_notation(self.graph.labels())
    }

    fn apply_r7(&mut self) -> bool {
        let mut changed = false;
        for c in 0..self.classes.len() {
            for pol in [Polarity::Pos, Polarity::Neg] {
                let members = self.classes[c].clone();
                let Some(&src) = members.iter().find(|&&m| self.statuses[m].get(pol).is_excluded()) else {
                    continue;
                };
                for m in members {
                    if !self.statuses[m].get(pol).is_excluded() {
                        let notation = self.group.element(src).cycle_notation(self.graph.labels());
                        if self.exclude(m, pol, RuleId::R7, Witness::Conjugate { element: src, notation }) {
                            self.r7_firings += 1;
                            changed = true;
                        }
                    }
                }
            }
        }
        changed
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn fixed(&self, e: usize) -> &FixedSubgraph {
        &self.fixed[e]
    }

    pub fn status(&self, e: usize) -> &ElementStatus {
        &self.statuses[e]
    }

    pub fn statuses(&self) -> &[ElementStatus] {
        &self.statuses
    }

    /// Number of exclusions that needed conjugacy propagation.
    pub fn r7_firings(&self) -> usize {
        self.r7_firings
    }

    /// Whether each status is constant on its class.
    pub fn class_uniform(&self) -> bool {
        self.classes.iter().all(|c| {
            let first = &self.statuses[c[0]];
            c.iter().all(|&m| {
                self.statuses[m].pos.is_excluded() == first.pos.is_excluded()
                    && self.statuses[m].neg.is_excluded() == first.neg.is_excluded()
            })
        })
    }

    /// `(pos excluded, neg excluded)` per element.
    pub fn verdict_bits(&self) -> Vec<(bool, bool)> {
        self.statuses
            .iter()
            .map(|s| (s.pos.is_excluded(), s.neg.is_excluded()))
            .collect()
    }

    pub fn path_tag(&self, e: usize) -> PathTag {
        path_tag(&self.graph, self.group.element(e), &self.fixed[e])
    }

    /// Elements whose `pos` verdict is open, with the identity.
    pub fn positive_survivors(&self) -> Vec<bool> {
        self.statuses
            .iter()
            .enumerate()
            .map(|(i, s)| i == 0 || !s.pos.is_excluded())
            .collect()
    }

    /// Types of all nontrivial subgroups made of surviving elements,
    /// ordered by decreasing order and then by name.
    pub fn positive_upper_bounds(&self) -> Result<Vec<GroupType>, GroupError> {
        let subgroups = self.group.subgroups_within(&self.positive_survivors())?;
        let mut by_label: BTreeMap<String, GroupType> = BTreeMap::new();
        for h in subgroups.iter().filter(|h| h.order() > 1) {
            let t = identify_group_type(&self.group.subgroup_as_group(h));
            by_label.entry(t.label()).or_insert(t);
        }
        let mut out: Vec<GroupType> = by_label.into_values().collect();
        out.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.label().cmp(&b.label())));
        Ok(out)
    }

    pub fn intrinsically_chiral(&self) -> ChiralityCertificate {
        let mut class_traces = Vec::new();
        let mut surviving = Vec::new();
        for c in self.classes.iter().skip(1) {
            let rep = c[0];
            let notation = self.group.element(rep).cycle_notation(self.graph.labels());
            match &self.statuses[rep].neg {
                Verdict::Excluded(t) => class_traces.push((notation, t.clone())),
                Verdict::Open => surviving.push(notation),
            }
        }
        let all = (1..self.group.order()).all(|e| self.statuses[e].neg.is_excluded());
        ChiralityCertificate {
            graph: self.name.clone(),
            verdict: if all { Chirality::Proved } else { Chirality::Unknown },
            class_traces,
            surviving,
        }
    }

    /// Re-evaluates every trace. Returns one message per failure.
    pub fn audit(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for (e, s) in self.statuses.iter().enumerate() {
            for pol in [Polarity::Pos, Polarity::Neg] {
                if let Verdict::Excluded(t) = s.get(pol) {
                    if let Err(msg) = self.replay(e, pol, t) {
                        let notation = self.group.element(e).cycle_notation(self.graph.labels());
                        failures.push(format!("{} {notation} {pol:?} {}: {msg}", self.name, t.rule));
                    }
                }
            }
            if e == 0 && (s.pos.is_excluded() || s.neg.is_excluded()) {
                failures.push(format!("{}: identity excluded", self.name));
            }
        }
        failures
    }

    fn replay(&self, e: usize, pol: Polarity, t: &RuleTrace) -> Result<(), String> {
        let g = &self.graph;
        let pi = self.group.element(e);
        let f = fixed_subgraph_unchecked(g, pi);
        let want = |ok: bool, why: &str| if ok { Ok(()) } else { Err(why.to_string()) };
        let earlier = |idx: usize, p: Polarity| -> Result<(), String> {
            match self.statuses.get(idx).map(|s| s.get(p)) {
                Some(Verdict::Excluded(c)) if c.step < t.step => Ok(()),
                Some(Verdict::Excluded(_)) => Err("cited exclusion is not earlier".into()),
                _ => Err("cited element is not excluded".into()),
            }
        };
        match (t.rule, &t.witness) {
            (RuleId::R1, _) => want(pol == Polarity::Pos && !f.embeds_in_s1(), "F embeds in S1"),
            (RuleId::R2, _) => want(!f.is_planar(), "F is planar"),
            (RuleId::R3, _) => want(pol == Polarity::Neg && pi.order() % 2 == 1, "order is even"),
            (RuleId::R4, _) => want(
                pol == Polarity::Neg && f.more_than_two_points() && pi.order() != 2,
                "R4 hypotheses fail",
            ),
            (RuleId::R5, Witness::Path { path }) => {
                want(pol == Polarity::Neg && f.more_than_two_points(), "two or fewer points")?;
                let idx: Option<Vec<usize>> = path.iter().map(|l| g.index_of(l)).collect();
                let idx = idx.ok_or("unknown label in path")?;
                let (&a, &b) = (idx.first().ok_or("empty path")?, idx.last().ok_or("empty path")?);
                want(idx.len() >= 2 && pi.image(a) == b && pi.image(b) == a, "ends not interchanged")?;
                let mut seen = 0u64;
                for &v in &idx {
                    want(seen & (1 << v) == 0, "path repeats a vertex")?;
                    seen |= 1 << v;
                }
                want(
                    idx[1..idx.len() - 1].iter().all(|&v| pi.image(v) != v),
                    "interior vertex fixed",
                )?;
                want(
                    idx.windows(2).all(|w| g.has_edge(w[0], w[1]) && !flips(pi, w[0], w[1])),
                    "missing or flipped edge",
                )
            }
            (RuleId::R6a | RuleId::R6b | RuleId::R6c, Witness::Power { k, element, .. }) => {
                let p = pi.power(*k as i64);
                want(!p.is_identity() && self.group.index_of(&p) == Some(*element), "power mismatch")?;
                match t.rule {
                    RuleId::R6a => {
                        want(pol == Polarity::Pos, "polarity")?;
                        earlier(*element, Polarity::Pos)
                    }
                    RuleId::R6b => {
                        want(pol == Polarity::Neg && k % 2 == 1, "k is even")?;
                        earlier(*element, Polarity::Neg)
                    }
                    _ => {
                        want(pol == Polarity::Neg && k % 2 == 0, "k is odd")?;
                        earlier(*element, Polarity::Pos)
                    }
                }
            }
            (RuleId::R7, Witness::Conjugate { element, .. }) => {
                let other = self.group.element(*element);
                let conj = self
                    .group
                    .elements()
                    .iter()
                    .any(|s| pi.conjugate_by(s) == *other);
                want(conj, "not conjugate")?;
                earlier(*element, pol)
            }
            (RuleId::R9, w) => {
                want(pol == Polarity::Pos && !f.is_empty(), "F is empty")?;
                match w {
                    Witness::AxisVertex { k, vertex } => {
                        let v = g.index_of(vertex).ok_or("unknown vertex")?;
                        let p = pi.power(*k as i64);
                        want(!p.is_identity() && p.image(v) == v && pi.image(v) != v, "vertex witness fails")
                    }
                    Witness::AxisEdge { k, edge } => {
                        let u = g.index_of(&edge.0).ok_or("unknown vertex")?;
                        let v = g.index_of(&edge.1).ok_or("unknown vertex")?;
                        let p = pi.power(*k as i64);
                        let kept = flips(pi, u, v) || (pi.image(u) == u && pi.image(v) == v);
                        want(
                            !p.is_identity() && g.has_edge(u, v) && flips(&p, u, v) && !kept,
                            "edge witness fails",
                        )
                    }
                    _ => Err("wrong witness kind".into()),
                }
            }
            _ => Err("witness does not match rule".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chirality {
    Proved,
    Unknown,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChiralityCertificate {
    pub graph: String,
    pub verdict: Chirality,
    /// Class representative and the trace excluding its `neg` verdict.
    pub class_traces: Vec<(String, RuleTrace)>,
    /// Representatives of classes with an open `neg` verdict.
    pub surviving: Vec<String>,
}
