#![allow(dead_code)]

pub mod properties;
pub mod tables;

use heawood::{build_reference_catalog, FamilyCatalog, Perm, SimpleGraph};
use rand::rngs::StdRng;
use rand::Rng;
use std::sync::OnceLock;

pub fn catalog() -> &'static FamilyCatalog {
    static CAT: OnceLock<FamilyCatalog> = OnceLock::new();
    CAT.get_or_init(build_reference_catalog)
}

pub fn graph(name: &str) -> &'static SimpleGraph {
    catalog().graph(name).unwrap_or_else(|| panic!("no catalog graph {name}"))
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let names = labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    SimpleGraph::new(names, edges).unwrap()
}

pub fn adjacency_matrix(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j)).collect()).collect()
}

/// All permutations of `0..n`, by Heap's algorithm.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Counts edge-preserving bijections by exhaustive search.
pub fn brute_force_automorphisms(g: &SimpleGraph) -> usize {
    let m = adjacency_matrix(g);
    let n = g.order();
    let mut count = 0;
    for_each_permutation(n, &mut |p| {
        if (0..n).all(|i| (i + 1..n).all(|j| m[i][j] == m[p[i]][p[j]])) {
            count += 1;
        }
    });
    count
}

/// Connectivity of the vertices in `keep`, by depth-first search.
pub fn connected_within(m: &[Vec<bool>], keep: &[bool]) -> bool {
    let n = m.len();
    let Some(start) = (0..n).find(|&i| keep[i]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if keep[w] && m[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|i| !keep[i] || seen[i])
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether `u` and `v` can be joined by a path whose interior is exactly
/// `inner` in some order.
fn threads(m: &[Vec<bool>], u: usize, v: usize, inner: &[usize]) -> bool {
    if inner.is_empty() {
        return m[u][v];
    }
    let mut found = false;
    for_each_permutation(inner.len(), &mut |p| {
        if found {
            return;
        }
        let mut prev = u;
        let mut ok = true;
        for &k in p {
            if !m[prev][inner[k]] {
                ok = false;
                break;
            }
            prev = inner[k];
        }
        if ok && m[prev][v] {
            found = true;
        }
    });
    found
}

/// Tries every assignment of the spare vertices to branch pairs (or to
/// nothing) and checks that each pair is threaded by its assigned vertices.
fn subdivision_with(m: &[Vec<bool>], pairs: &[(usize, usize)], spare: &[usize]) -> bool {
    let mut assign = vec![usize::MAX; spare.len()];
    fn go(
        m: &[Vec<bool>],
        pairs: &[(usize, usize)],
        spare: &[usize],
        assign: &mut Vec<usize>,
        i: usize,
    ) -> bool {
        if i == spare.len() {
            return pairs.iter().enumerate().all(|(k, &(u, v))| {
                let inner: Vec<usize> =
                    (0..spare.len()).filter(|&s| assign[s] == k).map(|s| spare[s]).collect();
                threads(m, u, v, &inner)
            });
        }
        for choice in (0..pairs.len()).chain([usize::MAX]) {
            assign[i] = choice;
            if go(m, pairs, spare, assign, i + 1) {
                return true;
            }
        }
        false
    }
    go(m, pairs, spare, &mut assign, 0)
}

/// Kuratowski oracle: searches for a subdivision of K5 or K3,3.
pub fn has_kuratowski_subdivision(g: &SimpleGraph) -> bool {
    let m = adjacency_matrix(g);
    let n = g.order();
    for branch in subsets(n, 5) {
        let pairs: Vec<(usize, usize)> = subsets(5, 2).iter().map(|p| (branch[p[0]], branch[p[1]])).collect();
        let spare: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
        if subdivision_with(&m, &pairs, &spare) {
            return true;
        }
    }
    for branch in subsets(n, 6) {
        for side in subsets(6, 3) {
            if !side.contains(&0) {
                continue;
            }
            let left: Vec<usize> = side.iter().map(|&i| branch[i]).collect();
            let right: Vec<usize> = (0..6).filter(|i| !side.contains(i)).map(|i| branch[i]).collect();
            let pairs: Vec<(usize, usize)> =
                left.iter().flat_map(|&u| right.iter().map(move |&v| (u, v))).collect();
            let spare: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
            if subdivision_with(&m, &pairs, &spare) {
                return true;
            }
        }
    }
    false
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Checks that `path` is a valid path-lemma witness for `pi`: it runs from
/// some `a` to `pi(a)` along graph edges, its interior avoids fixed
/// vertices, and none of its edges is flipped by `pi`.
pub fn valid_witness(g: &SimpleGraph, pi: &Perm, path: &[String]) -> Result<(), String> {
    let idx: Vec<usize> = path
        .iter()
        .map(|l| g.index_of(l).ok_or(format!("unknown vertex {l}")))
        .collect::<Result<_, _>>()?;
    if idx.len() < 2 {
        return Err("path too short".into());
    }
    let (a, b) = (idx[0], *idx.last().unwrap());
    if pi.image(a) != b || pi.image(b) != a || a == b {
        return Err(format!("endpoints {} {} are not swapped-pair images", path[0], path.last().unwrap()));
    }
    for w in idx.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(format!("{}-{} is not an edge", g.label(w[0]), g.label(w[1])));
        }
        if pi.image(w[0]) == w[1] && pi.image(w[1]) == w[0] {
            return Err(format!("edge {}-{} is flipped", g.label(w[0]), g.label(w[1])));
        }
    }
    for &v in &idx[1..idx.len() - 1] {
        if pi.image(v) == v {
            return Err(format!("interior vertex {} is fixed", g.label(v)));
        }
    }
    Ok(())
}

/// Sorted edge list with each pair ordered, for label-level comparison.
pub fn edge_set(g: &SimpleGraph) -> Vec<(String, String)> {
    let mut e: Vec<(String, String)> = g
        .edge_labels()
        .into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    e.sort();
    e
}
