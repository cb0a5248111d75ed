//! Finite permutation groups given by their full element list.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::perm::Perm;

/// Unrestricted subgroup enumeration is refused above this order.
pub const MAX_LATTICE_ORDER: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group of order {0} is too large for unrestricted subgroup enumeration (limit {MAX_LATTICE_ORDER})")]
    TooLarge(usize),
    #[error("the allowed set must contain the identity")]
    IdentityNotAllowed,
    #[error("elements act on different numbers of points")]
    DegreeMismatch,
}

/// A permutation group stored element by element. The identity is always
/// element 0 and the remaining elements are sorted.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::from_closed(degree, vec![Perm::identity(degree)])
    }

    /// Wraps an element list that is already closed under composition.
    pub(crate) fn from_closed(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let id = Perm::identity(degree);
        let pos = elements.iter().position(|p| *p == id).expect("group contains identity");
        let id = elements.remove(pos);
        elements.insert(0, id);
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermGroup { degree, elements, index }
    }

    /// The group generated by `gens` acting on `degree` points.
    pub fn generated(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in gens {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_closed(degree, seen.into_iter().collect()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Index of the product `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.elements[a].compose(&self.elements[b]) == self.elements[b].compose(&self.elements[a]))
        })
    }

    /// Checks closure under composition and inverses; used by tests.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([self.elements[0].clone()]);
        for (i, p) in self.elements.iter().enumerate().skip(1) {
            if span.len() == self.order() {
                break;
            }
            if span.contains(p) {
                continue;
            }
            gens.push(i);
            let g: Vec<Perm> = gens.iter().map(|&j| self.elements[j].clone()).collect();
            span = PermGroup::generated(self.degree, &g)
                .expect("same degree")
                .elements
                .into_iter()
                .collect();
        }
        gens
    }

    /// Conjugacy classes as sorted index lists. The identity class comes
    /// first; the rest are ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let gens = self.generators();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = self.index[&self.elements[x].conjugate_by(&self.elements[g])];
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        class.push(y);
                        queue.push_back(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// The subgroup generated by the given elements (indices into this group).
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        self.close(&[0], gens, None).expect("unrestricted closure always succeeds")
    }

    /// Extends the subgroup `base` by `extra` generators. Returns `None` as
    /// soon as an element outside `allowed` is produced.
    fn close(&self, base: &[usize], extra: &[usize], allowed: Option<&[bool]>) -> Option<Subgroup> {
        let mut member = vec![false; self.order()];
        let mut elems: Vec<usize> = Vec::new();
        for &b in base {
            if !member[b] {
                member[b] = true;
                elems.push(b);
            }
        }
        if !member[0] {
            member[0] = true;
            elems.push(0);
        }
        let gens: Vec<usize> = extra.to_vec();
        let mut queue: VecDeque<usize> = elems.iter().copied().collect();
        let mut all_gens = gens.clone();
        all_gens.extend(base.iter().copied().filter(|&b| b != 0));
        while let Some(x) = queue.pop_front() {
            for &s in &all_gens {
                let y = self.mul(x, s);
                if !member[y] {
                    if let Some(ok) = allowed {
                        if !ok[y] {
                            return None;
                        }
                    }
                    member[y] = true;
                    elems.push(y);
                    queue.push_back(y);
                }
            }
        }
        elems.sort_unstable();
        Some(Subgroup { elements: elems, generators: gens })
    }

    /// Every subgroup whose elements all lie in `allowed`, including the
    /// trivial one. Subgroups are built by adding one allowed element at a
    /// time to subgroups already found, starting from the trivial group, so
    /// every qualifying subgroup is reached through a chain of its own
    /// elements.
    pub fn subgroups_within(&self, allowed: &[bool]) -> Result<Vec<Subgroup>, GroupError> {
        if !allowed[0] {
            return Err(GroupError::IdentityNotAllowed);
        }
        let n = self.order();
        // Elements whose cyclic subgroup stays inside the allowed set.
        let mut usable = vec![false; n];
        for i in 1..n {
            if allowed[i] {
                usable[i] = self.close(&[0], &[i], Some(allowed)).is_some();
            }
        }
        let trivial = Subgroup { elements: vec![0], generators: Vec::new() };
        let mut seen: HashSet<Vec<usize>> = HashSet::from([trivial.elements.clone()]);
        let mut out = vec![trivial];
        let mut next = 0;
        while next < out.len() {
            let h = out[next].clone();
            next += 1;
            let mut member = vec![false; n];
            for &e in &h.elements {
                member[e] = true;
            }
            let base_gens: Vec<usize> = if h.generators.is_empty() { vec![0] } else { h.generators.clone() };
            for g in 1..n {
                if !usable[g] || member[g] {
                    continue;
                }
                let mut gens = base_gens.clone();
                gens.retain(|&x| x != 0);
                gens.push(g);
                let Some(k) = self.close(&[0], &gens, Some(allowed)) else {
                    continue;
                };
                if seen.insert(k.elements.clone()) {
                    out.push(k);
                }
            }
        }
        Ok(out)
    }

    /// Every subgroup; refused above [`MAX_LATTICE_ORDER`].
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        if self.order() > MAX_LATTICE_ORDER {
            return Err(GroupError::TooLarge(self.order()));
        }
        self.subgroups_within(&vec![true; self.order()])
    }

    /// Materializes a subgroup as a standalone group.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> PermGroup {
        PermGroup::from_closed(
            self.degree,
            h.elements.iter().map(|&i| self.elements[i].clone()).collect(),
        )
    }
}

/// A subgroup of a [`PermGroup`], as sorted indices into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize) -> Perm {
        Perm::from_images(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>()).unwrap()
    }

    fn swap01(n: usize) -> Perm {
        let mut im: Vec<usize> = (0..n).collect();
        im.swap(0, 1);
        Perm::from_images(&im).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        PermGroup::generated(n, &[cyc(n), swap01(n)]).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(sym(4).order(), 24);
        assert!(sym(4).is_closed());
        assert!(!sym(3).is_abelian());
    }

    #[test]
    fn classes_of_s4() {
        let classes = sym(4).conjugacy_classes();
        assert_eq!(classes.len(), 5);
        assert_eq!(classes[0], vec![0]);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn trivial_group_has_one_class() {
        assert_eq!(PermGroup::trivial(3).conjugacy_classes().len(), 1);
    }

    #[test]
    fn subgroup_counts() {
        // S3 has 6 subgroups and S4 has 30.
        assert_eq!(sym(3).all_subgroups().unwrap().len(), 6);
        assert_eq!(sym(4).all_subgroups().unwrap().len(), 30);
    }

    #[test]
    fn lattice_refused_for_large_groups() {
        assert_eq!(sym(6).all_subgroups().unwrap_err(), GroupError::TooLarge(720));
    }

    #[test]
    fn empty_generators_give_trivial() {
        let g = sym(4);
        assert_eq!(g.generated_subgroup(&[]).order(), 1);
    }
}
