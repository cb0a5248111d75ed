//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at each node and refines to an equitable partition.
//! Every leaf is a vertex ordering; the canonical form is the ordering with
//! the lexicographically least adjacency encoding. Automorphisms discovered
//! along the way prune children that lie in one orbit of the pointwise
//! stabilizer of the current prefix.

use std::cmp::Ordering;

use crate::graph::{iter_mask, SimpleGraph, VertexMask};

/// Ordered partition of vertex indices.
pub(crate) type Partition = Vec<Vec<usize>>;

/// A labeling-independent description of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `ordering[p]` is the label placed at canonical position `p`.
    pub ordering: Vec<String>,
    /// Edges between canonical positions, `(p, q)` with `p < q`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Equal for two graphs exactly when they are isomorphic.
    pub fingerprint: String,
    positions: Vec<usize>,
}

impl CanonicalForm {
    /// `vertex_order()[p]` is the vertex index placed at position `p`.
    pub fn vertex_order(&self) -> &[usize] {
        &self.positions
    }
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every cell. Cell order depends only on structure.
pub(crate) fn refine(g: &SimpleGraph, mut cells: Partition) -> Partition {
    loop {
        let n = g.order();
        let mut cell_of = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let masks: Vec<VertexMask> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | (1 << v)))
            .collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (g.neighbors(v) & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

pub(crate) fn unit_partition(g: &SimpleGraph) -> Partition {
    if g.order() == 0 {
        Vec::new()
    } else {
        vec![(0..g.order()).collect()]
    }
}

fn target_cell(p: &Partition) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn individualize(p: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend_from_slice(&p[..cell]);
    out.push(vec![v]);
    out.push(p[cell].iter().copied().filter(|&w| w != v).collect());
    out.extend_from_slice(&p[cell + 1..]);
    out
}

fn encode(g: &SimpleGraph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| iter_mask(g.neighbors(v)).fold(0u64, |m, w| m | (1 << pos[w])))
        .collect()
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, p: &Partition) {
        let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
        let code = encode(self.g, &order);
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best, best_order)) => match code.cmp(best) {
                Ordering::Less => self.best = Some((code, order)),
                Ordering::Equal => {
                    let mut auto = vec![0usize; order.len()];
                    for (a, b) in best_order.iter().zip(&order) {
                        auto[*a] = *b;
                    }
                    self.automorphisms.push(auto);
                }
                Ordering::Greater => {}
            },
        }
    }

    fn descend(&mut self, p: Partition, prefix: &mut Vec<usize>) {
        let Some(ci) = target_cell(&p) else {
            self.leaf(&p);
            return;
        };
        let cell = p[ci].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            prefix.push(v);
            let child = refine(self.g, individualize(&p, ci, v));
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for a in &self.automorphisms {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.order();
    let positions = if n == 0 {
        Vec::new()
    } else {
        let mut search = Search {
            g,
            best: None,
            automorphisms: Vec::new(),
        };
        let root = refine(g, unit_partition(g));
        search.descend(root, &mut Vec::new());
        search.best.expect("non-empty search tree").1
    };
    let code = encode(g, &positions);
    let mut edges = Vec::new();
    for (p, row) in code.iter().enumerate() {
        for q in iter_mask(*row) {
            if q > p {
                edges.push((p, q));
            }
        }
    }
    let mut fingerprint = format!("n{}m{}", n, edges.len());
    for row in &code {
        fingerprint.push_str(&format!(":{row:x}"));
    }
    CanonicalForm {
        ordering: positions.iter().map(|&v| g.label(v).to_string()).collect(),
        edges,
        fingerprint,
        positions,
    }
}

/// An isomorphism `g1 -> g2` as a map from vertex indices of `g1` to vertex
/// indices of `g2`, if one exists.
pub fn isomorphism(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Vec<usize>> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.fingerprint != c2.fingerprint {
        return None;
    }
    let mut map = vec![0usize; g1.order()];
    for (a, b) in c1.vertex_order().iter().zip(c2.vertex_order()) {
        map[*a] = *b;
    }
    Some(map)
}

pub fn are_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
    isomorphism(g1, g2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, offset: usize) -> SimpleGraph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (labels[(i * offset) % n].clone(), labels[((i + 1) * offset) % n].clone()))
            .collect();
        SimpleGraph::new(labels.clone(), edges).unwrap()
    }

    #[test]
    fn relabeled_cycles_match() {
        let a = cycle(7, 1);
        let b = cycle(7, 3);
        let map = isomorphism(&a, &b).expect("both are 7-cycles");
        for (i, j) in a.edges() {
            assert!(b.has_edge(map[i], map[j]));
        }
    }

    #[test]
    fn different_sizes_differ() {
        let k7 = SimpleGraph::complete((0..7).map(|i| i.to_string())).unwrap();
        assert!(!are_isomorphic(&k7, &cycle(14, 1)));
        assert_ne!(canonical_form(&k7).fingerprint, canonical_form(&cycle(7, 1)).fingerprint);
    }

    #[test]
    fn c6_vs_two_triangles() {
        let two = SimpleGraph::new(
            ["a", "b", "c", "d", "e", "f"],
            [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")],
        )
        .unwrap();
        assert!(!are_isomorphic(&two, &cycle(6, 1)));
    }

    #[test]
    fn empty_graph() {
        let g = SimpleGraph::with_vertices(Vec::<String>::new()).unwrap();
        assert_eq!(canonical_form(&g).fingerprint, "n0m0");
    }
}
