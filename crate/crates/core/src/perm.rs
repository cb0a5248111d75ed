//! Permutations of vertex indices.
//!
//! Composition is right-to-left everywhere: `p.compose(&q)` maps `x` to
//! `p(q(x))`.

use std::fmt;

use thiserror::Error;

use crate::graph::{SimpleGraph, VertexMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a bijection on {0} points")]
    NotBijective(usize),
    #[error("unknown vertex `{0}` in cycle notation")]
    UnknownVertex(String),
    #[error("vertex `{0}` appears twice in cycle notation")]
    RepeatedVertex(String),
    #[error("malformed cycle notation `{0}`")]
    Malformed(String),
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Perm(images.iter().map(|&x| x as u8).collect()))
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self^k`; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Least `n >= 1` with `self^n = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted lengths of the nontrivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn fixed_mask(&self) -> VertexMask {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x as usize)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Whether the permutation maps edges onto edges and non-edges onto non-edges.
    pub fn is_automorphism_of(&self, g: &SimpleGraph) -> bool {
        self.degree() == g.order()
            && (0..g.order()).all(|i| {
                let img = crate::graph::iter_mask(g.neighbors(i))
                    .fold(0u64, |m, j| m | (1 << self.image(j)));
                img == g.neighbors(self.image(i))
            })
    }

    /// Cycle notation over the graph's labels, e.g. `(bcd)(fgh)`. Labels are
    /// concatenated when all are one character long and space separated
    /// otherwise. The identity prints as `()`.
    pub fn cycle_notation(&self, labels: &[String]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let sep = if labels.iter().all(|l| l.chars().count() == 1) {
            ""
        } else {
            " "
        };
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<&str> = c.iter().map(|&i| labels[i].as_str()).collect();
                format!("({})", inner.join(sep))
            })
            .collect()
    }

    /// Parses cycle notation against a graph's labels. Single-character
    /// labels may be written without separators; otherwise separate labels by
    /// spaces or commas. `()`, `id` and the empty string denote the identity.
    pub fn parse_cycles(text: &str, g: &SimpleGraph) -> Result<Perm, PermError> {
        let n = g.order();
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "id" || trimmed == "()" {
            return Ok(Perm::identity(n));
        }
        let single = g.labels().iter().all(|l| l.chars().count() == 1);
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| PermError::Malformed(text.into()))?;
            let close = open.find(')').ok_or_else(|| PermError::Malformed(text.into()))?;
            let body = &open[..close];
            let names: Vec<String> = if single && !body.contains([' ', ',']) {
                body.chars().map(String::from).collect()
            } else {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            };
            let mut idx = Vec::with_capacity(names.len());
            for name in &names {
                let i = g
                    .index_of(name)
                    .ok_or_else(|| PermError::UnknownVertex(name.clone()))?;
                if touched[i] {
                    return Err(PermError::RepeatedVertex(name.clone()));
                }
                touched[i] = true;
                idx.push(i);
            }
            for w in 0..idx.len() {
                images[idx[w]] = idx[(w + 1) % idx.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Perm::from_images(&images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h8_like() -> SimpleGraph {
        SimpleGraph::with_vertices("abcdefgh".chars().map(String::from)).unwrap()
    }

    #[test]
    fn orders_and_powers() {
        let g = h8_like();
        let p = Perm::parse_cycles("(bcd)(fgh)", &g).unwrap();
        assert_eq!(p.order(), 3);
        assert!(p.power(0).is_identity());
        assert_eq!(p.power(-1), p.inverse());
        assert_eq!(p.power(4), p);
        let q = Perm::parse_cycles("(bcd)(efgh)", &g).unwrap();
        assert_eq!(q.order(), 12);
        assert_eq!(q.power(4).cycle_notation(g.labels()), "(bcd)");
    }

    #[test]
    fn composition_is_right_to_left() {
        let g = h8_like();
        let p = Perm::parse_cycles("(ab)", &g).unwrap();
        let q = Perm::parse_cycles("(bc)", &g).unwrap();
        // q first: a->a->b, b->c->c, c->b->a
        assert_eq!(p.compose(&q).cycle_notation(g.labels()), "(abc)");
    }

    #[test]
    fn notation_round_trip() {
        let g = h8_like();
        for s in ["(bcd)(fgh)", "(ab)(cdef)", "()", "(aceg)(bd)"] {
            let p = Perm::parse_cycles(s, &g).unwrap();
            assert_eq!(p.cycle_notation(g.labels()), s);
        }
        assert!(Perm::parse_cycles("(abz)", &g).is_err());
        assert!(Perm::parse_cycles("(aba)", &g).is_err());
        assert!(Perm::parse_cycles("(ab", &g).is_err());
    }

    #[test]
    fn conjugation_preserves_cycle_type() {
        let g = h8_like();
        let p = Perm::parse_cycles("(abc)(de)", &g).unwrap();
        let s = Perm::parse_cycles("(aegh)(bd)", &g).unwrap();
        let c = p.conjugate_by(&s);
        assert_eq!(c.cycle_type(), p.cycle_type());
        assert_eq!(c.order(), p.order());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(&[0, 0, 1]).is_err());
        assert!(Perm::from_images(&[0, 3, 1]).is_err());
    }
}
