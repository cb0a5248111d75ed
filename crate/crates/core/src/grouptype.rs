//! Naming small groups by invariants.
//!
//! A group is summarized by its order, whether it is abelian, and the
//! multiset of element orders. A name is only emitted when that signature
//! matches exactly one entry of the reference list (cyclic, dihedral and
//! symmetric groups, `D3xZ2` and `Z7:Z3`); otherwise the type is reported as
//! unrecognized with its invariants and generators. Groups with identical
//! signatures share the first listed name, so `S3` is reported as `D3` and
//! `D3xZ2` as `D6`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::perm::Perm;

/// Largest order [`identify_group_type`] attempts to name.
pub const MAX_IDENTIFY_ORDER: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub order: usize,
    pub abelian: bool,
    /// element order -> number of elements of that order
    pub element_orders: BTreeMap<u64, usize>,
}

impl Signature {
    pub fn of(g: &PermGroup) -> Self {
        let mut element_orders = BTreeMap::new();
        for p in g.elements() {
            *element_orders.entry(p.order()).or_insert(0) += 1;
        }
        Signature {
            order: g.order(),
            abelian: g.is_abelian(),
            element_orders,
        }
    }

    /// Compact multiset rendering such as `{1,2^7,3^2,6^2}`.
    pub fn multiset(&self) -> String {
        let parts: Vec<String> = self
            .element_orders
            .iter()
            .map(|(o, c)| if *c == 1 { o.to_string() } else { format!("{o}^{c}") })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupType {
    pub signature: Signature,
    /// `None` when the signature does not single out a reference group.
    pub name: Option<String>,
    /// Generators of the group this type was computed from.
    #[serde(skip)]
    pub generators: Vec<Perm>,
}

impl GroupType {
    pub fn order(&self) -> usize {
        self.signature.order
    }

    /// The recognized name, or `unrecognized(order, multiset)`.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!(
                "unrecognized({}, {})",
                self.signature.order,
                self.signature.multiset()
            ),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn transposition_on(n: usize) -> Perm {
    let mut im: Vec<usize> = (0..n).collect();
    im.swap(0, 1);
    Perm::from_images(&im).unwrap()
}

fn cycle_on(n: usize) -> Perm {
    Perm::from_images(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>()).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn totient(d: usize) -> usize {
    (1..=d).filter(|&k| gcd(k, d) == 1).count()
}

/// Element orders of the rotation subgroup `Z_n`.
fn cyclic_orders(n: usize) -> BTreeMap<u64, usize> {
    (1..=n).filter(|d| n % d == 0).map(|d| (d as u64, totient(d))).collect()
}

/// Reference signatures of a given order, in naming priority order.
fn references(order: usize) -> Vec<(String, Signature)> {
    let mut out = Vec::new();
    out.push((
        format!("Z{order}"),
        Signature { order, abelian: true, element_orders: cyclic_orders(order) },
    ));
    if order == 4 {
        let element_orders = BTreeMap::from([(1, 1), (2, 3)]);
        out.push(("D2".into(), Signature { order, abelian: true, element_orders }));
    }
    if order >= 6 && order % 2 == 0 {
        let n = order / 2;
        let mut element_orders = cyclic_orders(n);
        *element_orders.entry(2).or_insert(0) += n;
        out.push((format!("D{n}"), Signature { order, abelian: false, element_orders }));
    }
    let mut n = 3;
    let mut fact = 6;
    while fact <= order {
        if fact == order {
            let s = PermGroup::generated(n, &[cycle_on(n), transposition_on(n)]).unwrap();
            out.push((format!("S{n}"), Signature::of(&s)));
        }
        n += 1;
        fact *= n;
    }
    if order == 12 {
        // D3 on {0,1,2} times a swap of {3,4}.
        let r = Perm::from_images(&[1, 2, 0, 3, 4]).unwrap();
        let m = Perm::from_images(&[0, 2, 1, 3, 4]).unwrap();
        let z = Perm::from_images(&[0, 1, 2, 4, 3]).unwrap();
        out.push(("D3xZ2".into(), Signature::of(&PermGroup::generated(5, &[r, m, z]).unwrap())));
    }
    if order == 21 {
        let r = cycle_on(7);
        let s = Perm::from_images(&(0..7).map(|i| (2 * i) % 7).collect::<Vec<_>>()).unwrap();
        out.push(("Z7:Z3".into(), Signature::of(&PermGroup::generated(7, &[r, s]).unwrap())));
    }
    out
}

/// Names `g` when its signature singles out one reference group.
pub fn identify_group_type(g: &PermGroup) -> GroupType {
    let signature = Signature::of(g);
    let generators = g.generators().into_iter().map(|i| g.element(i).clone()).collect();
    let order = g.order();
    let mut name = None;
    if order == 1 {
        name = Some("trivial".to_string());
    } else if order <= MAX_IDENTIFY_ORDER {
        name = references(order)
            .into_iter()
            .find(|(_, r)| *r == signature)
            .map(|(n, _)| n);
    } else if is_full_symmetric(g) {
        name = Some(format!("S{}", moved_points(g)));
    }
    GroupType {
        signature,
        name,
        generators,
    }
}

fn moved_points(g: &PermGroup) -> usize {
    (0..g.degree())
        .filter(|&x| g.elements().iter().any(|p| p.image(x) != x))
        .count()
}

/// Order `k!` acting on exactly `k` points forces the full symmetric group.
fn is_full_symmetric(g: &PermGroup) -> bool {
    let k = moved_points(g);
    (1..=k).product::<usize>() == g.order()
}

/// Canonical spelling of a group name as written in the reference data
/// (`D3xZ2` and `S3` have the signatures of `D6` and `D3`).
pub fn normalize_name(name: &str) -> String {
    match name.trim() {
        "D3xZ2" | "D3×Z2" | "Z2xD3" => "D6".into(),
        "S3" => "D3".into(),
        "Z2xZ2" | "V4" => "D2".into(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reflection_on(n: usize) -> Perm {
        Perm::from_images(&(0..n).map(|i| (n - i) % n).collect::<Vec<_>>()).unwrap()
    }

    fn dihedral(n: usize) -> PermGroup {
        PermGroup::generated(n, &[cycle_on(n), reflection_on(n)]).unwrap()
    }

    #[test]
    fn d6_census() {
        let t = identify_group_type(&dihedral(6));
        assert_eq!(t.name.as_deref(), Some("D6"));
        assert_eq!(t.signature.multiset(), "{1,2^7,3^2,6^2}");
        assert!(!t.signature.abelian);
    }

    #[test]
    fn small_cases() {
        let z2 = PermGroup::generated(2, &[cycle_on(2)]).unwrap();
        assert_eq!(identify_group_type(&z2).label(), "Z2");
        assert_eq!(identify_group_type(&dihedral(7)).label(), "D7");
        assert_eq!(identify_group_type(&dihedral(3)).label(), "D3");
        let s4 = PermGroup::generated(4, &[cycle_on(4), transposition_on(4)]).unwrap();
        assert_eq!(identify_group_type(&s4).label(), "S4");
    }

    #[test]
    fn frobenius_21() {
        let r = cycle_on(7);
        let s = Perm::from_images(&(0..7).map(|i| (2 * i) % 7).collect::<Vec<_>>()).unwrap();
        let g = PermGroup::generated(7, &[r, s]).unwrap();
        assert_eq!(identify_group_type(&g).label(), "Z7:Z3");
    }

    #[test]
    fn klein_and_z4_are_separated() {
        let a = Perm::from_images(&[1, 0, 3, 2]).unwrap();
        let b = Perm::from_images(&[2, 3, 0, 1]).unwrap();
        assert_eq!(identify_group_type(&PermGroup::generated(4, &[a, b]).unwrap()).label(), "D2");
        assert_eq!(identify_group_type(&PermGroup::generated(4, &[cycle_on(4)]).unwrap()).label(), "Z4");
    }

    #[test]
    fn z2_cubed_is_unrecognized() {
        let a = Perm::from_images(&[1, 0, 2, 3, 4, 5]).unwrap();
        let b = Perm::from_images(&[0, 1, 3, 2, 4, 5]).unwrap();
        let c = Perm::from_images(&[0, 1, 2, 3, 5, 4]).unwrap();
        let t = identify_group_type(&PermGroup::generated(6, &[a, b, c]).unwrap());
        assert_eq!(t.name, None);
        assert_eq!(t.label(), "unrecognized(8, {1,2^7})");
        assert_eq!(t.generators.len(), 3);
    }

    #[test]
    fn analytic_signatures_match_constructed_groups() {
        for n in 3..=20 {
            let z = PermGroup::generated(n, &[cycle_on(n)]).unwrap();
            assert_eq!(references(n)[0].1, Signature::of(&z), "Z{n}");
            let d = references(2 * n).into_iter().find(|(k, _)| *k == format!("D{n}")).unwrap();
            assert_eq!(d.1, Signature::of(&dihedral(n)), "D{n}");
        }
    }

    #[test]
    fn large_orders_do_not_build_wide_permutations() {
        let c14_order = references(336);
        assert_eq!(c14_order[0].0, "Z336");
        assert_eq!(c14_order[1].0, "D168");
    }

    #[test]
    fn names_normalize() {
        assert_eq!(normalize_name("D3xZ2"), "D6");
        assert_eq!(normalize_name("Z3"), "Z3");
    }
}
