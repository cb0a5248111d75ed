//! The fixed subgraph of an automorphism and its topological predicates.
//!
//! For an automorphism `π` of `g`, `F = A ∪ B` where `A` is the subgraph
//! induced on the vertices fixed by `π` and `B` holds one point for every
//! edge whose endpoints `π` interchanges (the edge midpoint).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{iter_mask, SimpleGraph, VertexMask};
use crate::perm::Perm;
use crate::planarity::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixedSubError {
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
}

/// Number of points of `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointCount {
    Finite(usize),
    Infinite,
}

impl fmt::Display for PointCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointCount::Finite(n) => write!(f, "{n}"),
            PointCount::Infinite => f.write_str("inf"),
        }
    }
}

/// Shape of one connected component of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentShape {
    Point,
    /// Simple path with this many vertices (at least two).
    Path(usize),
    Cycle(usize),
    Other { vertices: usize, edges: usize },
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentShape::Point => f.write_str("pt"),
            ComponentShape::Path(n) => write!(f, "P{n}"),
            ComponentShape::Cycle(n) => write!(f, "C{n}"),
            ComponentShape::Other { vertices, edges } => write!(f, "G({vertices}v,{edges}e)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FixedSubgraph {
    /// Vertices with `π(v) = v`, as a mask over the source graph.
    pub fixed_vertices: VertexMask,
    /// Edges of `A`, as index pairs `i < j` of the source graph.
    pub induced_edges: Vec<(usize, usize)>,
    /// Flipped edges, as index pairs `i < j` of the source graph.
    pub midpoints: Vec<(usize, usize)>,
    /// `A` as a standalone graph on the fixed labels.
    part: SimpleGraph,
}

/// Builds `F` for an automorphism `pi` of `g`.
pub fn fixed_subgraph(g: &SimpleGraph, pi: &Perm) -> Result<FixedSubgraph, FixedSubError> {
    if !pi.is_automorphism_of(g) {
        return Err(FixedSubError::NotAutomorphism);
    }
    Ok(fixed_subgraph_unchecked(g, pi))
}

/// [`fixed_subgraph`] without the automorphism check.
pub(crate) fn fixed_subgraph_unchecked(g: &SimpleGraph, pi: &Perm) -> FixedSubgraph {
    let fixed = pi.fixed_mask();
    let mut induced_edges = Vec::new();
    let mut midpoints = Vec::new();
    for (i, j) in g.edges() {
        let (pi_i, pi_j) = (pi.image(i), pi.image(j));
        if pi_i == i && pi_j == j {
            induced_edges.push((i, j));
        } else if pi_i == j && pi_j == i {
            midpoints.push((i, j));
        }
    }
    FixedSubgraph {
        fixed_vertices: fixed,
        induced_edges,
        midpoints,
        part: g.induced_by_mask(fixed),
    }
}

impl FixedSubgraph {
    /// `A` as a standalone graph.
    pub fn graph_part(&self) -> &SimpleGraph {
        &self.part
    }

    pub fn is_empty(&self) -> bool {
        self.fixed_vertices == 0 && self.midpoints.is_empty()
    }

    pub fn fixed_count(&self) -> usize {
        self.fixed_vertices.count_ones() as usize
    }

    pub fn point_count(&self) -> PointCount {
        if self.induced_edges.is_empty() {
            PointCount::Finite(self.fixed_count() + self.midpoints.len())
        } else {
            PointCount::Infinite
        }
    }

    pub fn more_than_two_points(&self) -> bool {
        match self.point_count() {
            PointCount::Infinite => true,
            PointCount::Finite(n) => n > 2,
        }
    }

    /// Component shapes of `A`, sorted.
    pub fn components(&self) -> Vec<ComponentShape> {
        let a = &self.part;
        let mut out: Vec<ComponentShape> = a
            .components_within(a.vertex_mask())
            .into_iter()
            .map(|c| {
                let verts: Vec<usize> = iter_mask(c).collect();
                let n = verts.len();
                let degs: Vec<usize> = verts.iter().map(|&v| a.degree(v)).collect();
                let m = degs.iter().sum::<usize>() / 2;
                let max_deg = degs.iter().copied().max().unwrap_or(0);
                if n == 1 {
                    ComponentShape::Point
                } else if m == n - 1 && max_deg <= 2 {
                    ComponentShape::Path(n)
                } else if m == n && max_deg == 2 {
                    ComponentShape::Cycle(n)
                } else {
                    ComponentShape::Other { vertices: n, edges: m }
                }
            })
            .collect();
        out.sort();
        out
    }

    /// Whether `F` is homeomorphic to a subset of the circle: a disjoint
    /// union of arcs and points, or exactly one cycle.
    pub fn embeds_in_s1(&self) -> bool {
        let comps = self.components();
        if comps
            .iter()
            .all(|c| matches!(c, ComponentShape::Point | ComponentShape::Path(_)))
        {
            return true;
        }
        self.midpoints.is_empty() && comps.len() == 1 && matches!(comps[0], ComponentShape::Cycle(_))
    }

    /// Planarity of `F`; the isolated midpoints never matter.
    pub fn is_planar(&self) -> bool {
        is_planar(&self.part)
    }

    /// One-line summary such as `5v 6e 0m: G(4v,6e) + pt`.
    pub fn summary(&self) -> String {
        let comps: Vec<String> = self.components().iter().map(ToString::to_string).collect();
        let mut s = format!(
            "{}v {}e {}m",
            self.fixed_count(),
            self.induced_edges.len(),
            self.midpoints.len()
        );
        if !comps.is_empty() {
            s.push_str(": ");
            s.push_str(&comps.join(" + "));
        }
        s
    }
}

/// Free-function form of [`FixedSubgraph::embeds_in_s1`].
pub fn embeds_in_s1(f: &FixedSubgraph) -> bool {
    f.embeds_in_s1()
}

/// Free-function form of [`FixedSubgraph::is_planar`].
pub fn f_is_planar(f: &FixedSubgraph) -> bool {
    f.is_planar()
}
