//! Automorphism enumeration.
//!
//! Vertices are first split into cells by equitable refinement of the degree
//! partition; an automorphism must map every vertex into its own cell. The
//! backtracking then assigns images vertex by vertex in breadth-first order,
//! checking adjacency against the vertices already placed, so every leaf of
//! the search is an automorphism.

use crate::canon::{refine, unit_partition};
use crate::graph::{iter_mask, SimpleGraph};
use crate::group::PermGroup;
use crate::perm::Perm;

/// All automorphisms of `g` as a permutation group on its vertex indices.
pub fn automorphism_group(g: &SimpleGraph) -> PermGroup {
    let n = g.order();
    let cells = refine(g, unit_partition(g));
    let mut cell_of = vec![0usize; n];
    for (ci, c) in cells.iter().enumerate() {
        for &v in c {
            cell_of[v] = ci;
        }
    }
    let order = search_order(g, &cells);
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(g, &order, 0, &cells, &cell_of, &mut images, &mut used, &mut out);
    PermGroup::from_closed(n, out)
}

/// Breadth-first order, restarting each component at its vertex from the
/// smallest cell.
fn search_order(g: &SimpleGraph, cells: &[Vec<usize>]) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<usize> = Vec::new();
    let mut by_size: Vec<&Vec<usize>> = cells.iter().collect();
    by_size.sort_by_key(|c| c.len());
    for c in by_size {
        starts.extend(c.iter().copied());
    }
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in iter_mask(g.neighbors(v)) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &SimpleGraph,
    order: &[usize],
    depth: usize,
    cells: &[Vec<usize>],
    cell_of: &[usize],
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Perm>,
) {
    if depth == order.len() {
        out.push(Perm::from_images(images).expect("assignment is a bijection"));
        return;
    }
    let v = order[depth];
    for &w in &cells[cell_of[v]] {
        if used[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == g.has_edge(images[u], w));
        if !consistent {
            continue;
        }
        images[v] = w;
        used[w] = true;
        extend(g, order, depth + 1, cells, cell_of, images, used, out);
        used[w] = false;
        images[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_full_symmetric_group() {
        let k5 = SimpleGraph::complete((0..5).map(|i| i.to_string())).unwrap();
        assert_eq!(automorphism_group(&k5).order(), 120);
    }

    #[test]
    fn path_has_two() {
        let p = SimpleGraph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let aut = automorphism_group(&p);
        assert_eq!(aut.order(), 2);
        assert!(aut.elements().iter().all(|a| a.is_automorphism_of(&p)));
    }

    #[test]
    fn isolated_vertices_permute_freely() {
        let g = SimpleGraph::with_vertices(["a", "b", "c"]).unwrap();
        assert_eq!(automorphism_group(&g).order(), 6);
    }
}
