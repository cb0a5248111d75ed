//! Exact planarity test.
//!
//! The graph is split into biconnected blocks and each block is checked with
//! the Demoucron–Malgrange–Pertuiset path-addition procedure: start from a
//! cycle, then repeatedly embed a path through some fragment into a face that
//! contains all of the fragment's attachment vertices, preferring fragments
//! with a single admissible face. A fragment with no admissible face proves
//! the block nonplanar.

use std::collections::{HashSet, VecDeque};

use crate::graph::{iter_mask, SimpleGraph, VertexMask};

pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.order();
    let m = g.size();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|edges| block_is_planar(g.order(), edges))
}

type Edge = (usize, usize);

fn norm(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Edge sets of the biconnected components.
fn blocks(g: &SimpleGraph) -> Vec<Vec<Edge>> {
    struct St<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }
    fn dfs(s: &mut St, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in iter_mask(s.g.neighbors(u)) {
            if Some(v) == parent {
                continue;
            }
            if s.disc[v] == 0 {
                s.stack.push(norm(u, v));
                dfs(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == norm(u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if s.disc[v] < s.disc[u] {
                s.stack.push(norm(u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = g.order();
    let mut s = St {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 {
            dfs(&mut s, u, None);
        }
    }
    s.out
}

fn block_is_planar(n: usize, edges: &[Edge]) -> bool {
    let mut adj: Vec<VertexMask> = vec![0; n];
    let mut verts: VertexMask = 0;
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
        verts |= (1 << a) | (1 << b);
    }
    let nv = verts.count_ones() as usize;
    if nv <= 4 {
        return true;
    }
    if edges.len() > 3 * nv - 6 {
        return false;
    }

    // Initial cycle through the first edge.
    let (u0, v0) = edges[0];
    let Some(path) = bfs_path(&adj, v0, u0, verts, Some((v0, u0))) else {
        // A block with at least three vertices always contains a cycle.
        unreachable!("biconnected block without a cycle");
    };
    let mut embedded_v: VertexMask = 0;
    let mut embedded_e: HashSet<Edge> = HashSet::new();
    for w in path.windows(2) {
        embedded_e.insert(norm(w[0], w[1]));
    }
    embedded_e.insert(norm(u0, v0));
    for &x in &path {
        embedded_v |= 1 << x;
    }
    let mut faces: Vec<Vec<usize>> = vec![path.clone(), path.iter().rev().copied().collect()];

    while embedded_e.len() < edges.len() {
        let fragments = fragments(&adj, edges, embedded_v, &embedded_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fm = f.iter().fold(0u64, |m, &x| m | (1 << x));
                    frag.attachments & !fm == 0
                })
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let frag = &fragments[fi];
        let path = fragment_path(&adj, frag);
        for w in path.windows(2) {
            embedded_e.insert(norm(w[0], w[1]));
        }
        for &x in &path {
            embedded_v |= 1 << x;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

struct Fragment {
    attachments: VertexMask,
    /// Interior vertices; zero for a single chord edge.
    interior: VertexMask,
    chord: Option<Edge>,
}

fn fragments(adj: &[VertexMask], edges: &[Edge], embedded_v: VertexMask, embedded_e: &HashSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    let mut block_v: VertexMask = 0;
    for &(a, b) in edges {
        block_v |= (1 << a) | (1 << b);
        if embedded_v & (1 << a) != 0 && embedded_v & (1 << b) != 0 && !embedded_e.contains(&norm(a, b)) {
            out.push(Fragment {
                attachments: (1 << a) | (1 << b),
                interior: 0,
                chord: Some(norm(a, b)),
            });
        }
    }
    let mut rest = block_v & !embedded_v;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp: VertexMask = 1 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_mask(frontier) {
                next |= adj[v] & rest;
            }
            frontier = next & !comp;
            comp |= next;
        }
        let attachments = iter_mask(comp).fold(0, |m, v| m | (adj[v] & embedded_v));
        out.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
        rest &= !comp;
    }
    out
}

fn fragment_path(adj: &[VertexMask], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let mut atts = iter_mask(frag.attachments);
    let a = atts.next().expect("fragment has attachments");
    let b = atts.next().expect("biconnected fragment has two attachments");
    // Walk from a into the interior and out to b.
    bfs_path(adj, a, b, frag.interior | (1 << a) | (1 << b), Some((a, b)))
        .expect("fragment connects its attachments")
}

/// Shortest path from `s` to `t` using only vertices in `allowed`, never
/// using the edge `skip`. Interior vertices may not be `s` or `t`.
fn bfs_path(adj: &[VertexMask], s: usize, t: usize, allowed: VertexMask, skip: Option<Edge>) -> Option<Vec<usize>> {
    let skip = skip.map(|(a, b)| norm(a, b));
    let mut prev = vec![usize::MAX; adj.len()];
    let mut seen: VertexMask = 1 << s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in iter_mask(adj[u] & allowed) {
            if Some(norm(u, v)) == skip || seen & (1 << v) != 0 {
                continue;
            }
            prev[v] = u;
            if v == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            seen |= 1 << v;
            queue.push_back(v);
        }
    }
    None
}

/// Splits a cyclic face by a path whose two endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let i = face.iter().position(|&x| x == a).expect("endpoint on face");
    let j = face.iter().position(|&x| x == b).expect("endpoint on face");
    let interior = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut x = i;
    loop {
        f1.push(face[x]);
        if x == j {
            break;
        }
        x = (x + 1) % k;
    }
    f1.extend(interior.iter().rev());

    let mut f2 = Vec::new();
    let mut x = j;
    loop {
        f2.push(face[x]);
        if x == i {
            break;
        }
        x = (x + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}
