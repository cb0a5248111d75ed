//! Labeled simple graphs.
//!
//! Vertices carry opaque text labels and are stored in insertion order;
//! adjacency is kept as one `u64` bitmask per vertex, which caps a graph at
//! [`MAX_VERTICES`] vertices. Every graph in the families handled here has at
//! most 14 vertices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

/// Hard capacity of the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// Bitmask over vertex indices.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("loop edge [{0}, {0}]")]
    Loop(String),
    #[error("duplicate edge [{0}, {1}]")]
    MultiEdge(String, String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// An undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexMask>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting duplicate labels, loops, repeated edges and
    /// edges that mention a label outside `vertices`.
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut g = Self::with_vertices(vertices)?;
        for (a, b) in edges {
            g.insert_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(g)
    }

    /// A graph with the given vertices and no edges.
    pub fn with_vertices<V>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        for v in vertices {
            let v: String = v.into();
            if index.contains_key(&v) {
                return Err(GraphError::DuplicateLabel(v));
            }
            index.insert(v.clone(), labels.len());
            labels.push(v);
        }
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        let adj = vec![0; labels.len()];
        Ok(SimpleGraph { labels, index, adj })
    }

    /// The complete graph on `vertices`.
    pub fn complete<V>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let mut g = Self::with_vertices(vertices)?;
        let n = g.order();
        for i in 0..n {
            g.adj[i] = full_mask(n) & !(1 << i);
        }
        Ok(g)
    }

    /// Rebuilds a graph from labels and a symmetric, loop-free adjacency.
    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<VertexMask>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let g = SimpleGraph { labels, index, adj };
        debug_assert!(g.check_symmetric());
        g
    }

    fn check_symmetric(&self) -> bool {
        (0..self.order()).all(|i| {
            self.adj[i] & (1 << i) == 0
                && iter_mask(self.adj[i]).all(|j| self.adj[j] & (1 << i) != 0)
        })
    }

    fn insert_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        if i == j {
            return Err(GraphError::Loop(a.to_string()));
        }
        if self.has_edge(i, j) {
            return Err(GraphError::MultiEdge(a.to_string(), b.to_string()));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    /// Edge test by label; unknown labels are simply not adjacent.
    pub fn has_edge_labels(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// Neighborhood of `i` as a bitmask.
    pub fn neighbors(&self, i: usize) -> VertexMask {
        self.adj[i]
    }

    pub fn adjacency(&self) -> &[VertexMask] {
        &self.adj
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.degree(i)).collect()
    }

    /// Degree of every vertex keyed by label.
    pub fn degree_sequence(&self) -> BTreeMap<String, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.degree(i)))
            .collect()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.order() {
            for j in iter_mask(self.adj[i] >> (i + 1) << (i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    /// Edges as label pairs, in the same order as [`SimpleGraph::edges`].
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Mask of every vertex.
    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.order())
    }

    /// Triangles as sorted index triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (i, j) in self.edges() {
            let common = self.adj[i] & self.adj[j];
            for k in iter_mask(common) {
                if k > j {
                    out.push([i, j, k]);
                }
            }
        }
        out
    }

    /// Subgraph induced by a set of labels.
    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<SimpleGraph, GraphError> {
        let mut mask = 0;
        for l in labels {
            mask |= 1 << self.require(l.as_ref())?;
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Subgraph induced by the vertices in `mask`, keeping their relative order.
    pub fn induced_by_mask(&self, mask: VertexMask) -> SimpleGraph {
        let keep: Vec<usize> = iter_mask(mask).collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| {
                iter_mask(self.adj[i] & mask).fold(0, |acc, j| acc | (1 << pos[j]))
            })
            .collect();
        SimpleGraph::from_parts(labels, adj)
    }

    /// Connected components of the subgraph induced by `mask`.
    pub fn components_within(&self, mask: VertexMask) -> Vec<VertexMask> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach_within(start, mask);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach_within(&self, start: usize, mask: VertexMask) -> VertexMask {
        let mut seen: VertexMask = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_mask(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.components_within(self.vertex_mask()).len() == 1
    }

    /// True when more than `k` vertices remain and no removal of `k - 1`
    /// vertices disconnects the graph.
    pub fn is_k_connected(&self, k: usize) -> Result<bool, GraphError> {
        if k == 0 {
            return Err(GraphError::InvalidArgument(
                "connectivity order must be positive".into(),
            ));
        }
        let n = self.order();
        if n <= k {
            return Ok(false);
        }
        let all = self.vertex_mask();
        let mut ok = true;
        for_each_subset(n, k - 1, &mut |removed| {
            let rest = all & !removed;
            if self.components_within(rest).len() != 1 {
                ok = false;
            }
            ok
        });
        Ok(ok)
    }

    /// Renames vertex `i` to `names[i]`, keeping the vertex order.
    pub fn relabeled(&self, names: &[String]) -> Result<SimpleGraph, GraphError> {
        if names.len() != self.order() {
            return Err(GraphError::InvalidArgument(format!(
                "expected {} labels, got {}",
                self.order(),
                names.len()
            )));
        }
        let mut g = SimpleGraph::with_vertices(names.iter().cloned())?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// The image of the graph under a vertex permutation: vertex `i` becomes
    /// position `perm[i]` in the result, and labels follow their vertices.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let n = self.order();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![0; n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            adj[perm[i]] = iter_mask(self.adj[i]).fold(0, |acc, j| acc | (1 << perm[j]));
        }
        SimpleGraph::from_parts(labels, adj)
    }

    /// Adds a vertex joined to `neighbors`. Used by the move operations.
    pub(crate) fn push_vertex(&mut self, label: String, neighbors: VertexMask) -> Result<usize, GraphError> {
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        if self.order() == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(MAX_VERTICES + 1));
        }
        let id = self.order();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.adj.push(neighbors);
        for j in iter_mask(neighbors) {
            self.adj[j] |= 1 << id;
        }
        Ok(id)
    }

    pub(crate) fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edge_labels()
            .into_iter()
            .map(|(a, b)| format!("{a}{b}"))
            .collect();
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

pub fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn iter_mask(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Calls `f` on every `size`-subset of `0..n` as a mask until `f` returns false.
pub(crate) fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(VertexMask) -> bool) {
    fn go(start: usize, n: usize, left: usize, acc: VertexMask, f: &mut dyn FnMut(VertexMask) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        for i in start..n {
            if n - i < left {
                break;
            }
            if !go(i + 1, n, left - 1, acc | (1 << i), f) {
                return false;
            }
        }
        true
    }
    go(0, n, size, 0, f);
}
