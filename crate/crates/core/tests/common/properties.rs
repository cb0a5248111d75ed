//! Property checks shared by the suites and the acceptance run. Each returns
//! a short summary on success and the first counterexample on failure.

use std::collections::BTreeSet;

use heawood::engine::Schedule;
use heawood::fixedsub::fixed_subgraph;
use heawood::graph::iter_mask;
use heawood::moves::{fresh_label, y_sites};
use heawood::{automorphism_group, canonical_form, is_planar, nabla_y, y_nabla, Analysis};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;

pub type Check = Result<String, String>;

/// ∇Y then Y∇ on every triangle, and Y∇ then ∇Y on every Y site.
pub fn move_round_trips() -> Check {
    let mut sites = 0;
    for m in catalog().members() {
        let g = &m.graph;
        let fresh = fresh_label(g);
        for [x, y, z] in g.triangles() {
            let tri = [g.label(x), g.label(y), g.label(z)];
            let h = nabla_y(g, tri, &fresh).map_err(|e| format!("{} {tri:?}: {e}", m.name))?;
            let back = y_nabla(&h, &fresh).map_err(|e| format!("{} {tri:?}: {e}", m.name))?;
            if edge_set(&back) != edge_set(g) || h.size() != g.size() {
                return Err(format!("{}: triangle {tri:?} does not round-trip", m.name));
            }
            sites += 1;
        }
        for v in y_sites(g) {
            let label = g.label(v).to_string();
            let nbrs: Vec<String> = iter_mask(g.neighbors(v)).map(|w| g.label(w).to_string()).collect();
            let h = y_nabla(g, &label).map_err(|e| format!("{} at {label}: {e}", m.name))?;
            let back = nabla_y(&h, [&nbrs[0], &nbrs[1], &nbrs[2]], &label).map_err(|e| format!("{}: {e}", m.name))?;
            if edge_set(&back) != edge_set(g) {
                return Err(format!("{}: Y site {label} does not round-trip", m.name));
            }
            sites += 1;
        }
    }
    Ok(format!("{sites} sites"))
}

/// Every enumerated automorphism preserves edges; counts agree with
/// exhaustive search on graphs with at most nine vertices.
pub fn automorphisms_vs_brute_force() -> Check {
    let mut checked = 0;
    for m in catalog().members() {
        let aut = automorphism_group(&m.graph);
        for p in aut.elements() {
            if m.graph.edges().iter().any(|&(i, j)| !m.graph.has_edge(p.image(i), p.image(j))) {
                return Err(format!("{}: {:?} breaks an edge", m.name, p));
            }
        }
        if m.graph.order() <= 9 {
            let brute = brute_force_automorphisms(&m.graph);
            if brute != aut.order() {
                return Err(format!("{}: {} automorphisms, brute force {brute}", m.name, aut.order()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs counted exhaustively"))
}

pub fn canonical_stability(relabelings: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    for m in catalog().members() {
        let base = canonical_form(&m.graph).fingerprint;
        for _ in 0..relabelings {
            let p = random_permutation(&mut rng, m.graph.order());
            if canonical_form(&m.graph.permuted(&p)).fingerprint != base {
                return Err(format!("{}: relabeling {p:?} changes the canonical form", m.name));
            }
        }
    }
    Ok(format!("{relabelings} relabelings per graph"))
}

pub fn planarity_vs_oracle(samples: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut planar = 0;
    for trial in 0..samples {
        let n = rng.gen_range(5..=8);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p);
        let oracle = !has_kuratowski_subdivision(&g);
        if is_planar(&g) != oracle {
            return Err(format!("trial {trial}: oracle says planar={oracle} for {:?}", g.edge_labels()));
        }
        planar += usize::from(oracle);
    }
    if planar < samples / 10 || samples - planar < samples / 10 {
        return Err(format!("unbalanced sample: {planar} of {samples} planar"));
    }
    Ok(format!("{samples} graphs, {planar} planar"))
}

/// `F(σπσ⁻¹) = σ(F(π))` for each class representative and a few σ.
pub fn fixed_subgraph_equivariance() -> Check {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    for m in catalog().members() {
        let g = &m.graph;
        let aut = automorphism_group(g);
        for class in aut.conjugacy_classes().iter().skip(1) {
            let pi = aut.element(class[0]);
            let f = fixed_subgraph(g, pi).map_err(|e| e.to_string())?;
            for _ in 0..3 {
                let sigma = aut.element(rng.gen_range(0..aut.order()));
                let fc = fixed_subgraph(g, &pi.conjugate_by(sigma)).map_err(|e| e.to_string())?;
                let mask = iter_mask(f.fixed_vertices).fold(0u64, |acc, v| acc | (1 << sigma.image(v)));
                let map = |pairs: &[(usize, usize)]| -> BTreeSet<(usize, usize)> {
                    pairs
                        .iter()
                        .map(|&(u, v)| {
                            let (a, b) = (sigma.image(u), sigma.image(v));
                            (a.min(b), a.max(b))
                        })
                        .collect()
                };
                let same = fc.fixed_vertices == mask
                    && map(&f.induced_edges) == fc.induced_edges.iter().copied().collect()
                    && map(&f.midpoints) == fc.midpoints.iter().copied().collect()
                    && f.summary() == fc.summary()
                    && f.embeds_in_s1() == fc.embeds_in_s1()
                    && f.is_planar() == fc.is_planar();
                if !same {
                    return Err(format!("{}: class of {:?} is not equivariant", m.name, pi));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} conjugations"))
}

pub fn schedule_independence(shuffles: u64) -> Check {
    for m in catalog().members() {
        let aut = automorphism_group(&m.graph);
        let base = Analysis::from_group(&m.name, &m.graph, aut.clone(), Schedule::default());
        for seed in 0..shuffles {
            let s = Analysis::from_group(&m.name, &m.graph, aut.clone(), Schedule { seed: Some(seed) });
            if s.verdict_bits() != base.verdict_bits() {
                return Err(format!("{}: shuffle {seed} changes the verdicts", m.name));
            }
        }
    }
    Ok(format!("{shuffles} shuffles per graph"))
}

/// Trace replay, class uniformity and zero R7 firings.
pub fn audit_clean() -> Check {
    let mut traces = 0;
    for m in catalog().members() {
        let a = Analysis::new(&m.name, &m.graph);
        if let Some(f) = a.audit().first() {
            return Err(format!("{}: {f}", m.name));
        }
        if !a.class_uniform() || a.r7_firings() != 0 {
            return Err(format!("{}: statuses depend on R7", m.name));
        }
        traces += a.statuses().iter().map(|s| [&s.pos, &s.neg].iter().filter(|v| v.is_excluded()).count()).sum::<usize>();
    }
    Ok(format!("{traces} traces replayed"))
}
