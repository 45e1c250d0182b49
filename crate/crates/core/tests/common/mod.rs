//! Brute-force reference implementations, written straight from the
//! definitions over coordinate tuples. They share no code with the library
//! beyond converting sets at the boundary.

#![allow(dead_code)]

use std::collections::BTreeSet;

use semiaffine::{GroupSpec, SubsetBits};

pub type Tuple = Vec<u64>;
pub type Set = BTreeSet<Tuple>;

/// `Z<n1> x ... x Z<nk>` as plain coordinate tuples.
pub struct Oracle {
    pub orders: Vec<u64>,
    pub elems: Vec<Tuple>,
}

impl Oracle {
    pub fn new(orders: &[u64]) -> Self {
        let mut elems: Vec<Tuple> = vec![Vec::new()];
        for &n in orders {
            elems = elems
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |c| {
                        let mut t = t.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        Oracle {
            orders: orders.to_vec(),
            elems,
        }
    }

    pub fn of(group: &GroupSpec) -> Self {
        Self::new(group.orders())
    }

    pub fn zero(&self) -> Tuple {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Tuple {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Tuple {
        a.iter()
            .zip(&self.orders)
            .map(|(x, n)| (n - x) % n)
            .collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Tuple {
        self.add(a, &self.neg(b))
    }

    pub fn is_affine(&self, x: &Set) -> bool {
        x.iter().all(|a| {
            x.iter()
                .all(|b| x.iter().all(|c| x.contains(&self.sub(&self.add(a, b), c))))
        })
    }

    pub fn is_semiaffine(&self, x: &Set) -> bool {
        x.iter().all(|a| {
            x.iter().all(|b| {
                x.iter().all(|c| {
                    x.contains(&self.sub(&self.add(a, b), c))
                        || x.contains(&self.add(&self.sub(a, b), c))
                })
            })
        })
    }

    /// Every `z ∈ h` with `2z = a + b` for `a, b ∈ x` lies in `x`.
    pub fn is_midconvex_in(&self, x: &Set, h: &Set) -> bool {
        x.iter().all(|a| {
            x.iter().all(|b| {
                let s = self.add(a, b);
                h.iter()
                    .filter(|z| self.add(z, z) == s)
                    .all(|z| x.contains(z))
            })
        })
    }

    pub fn all(&self) -> Set {
        self.elems.iter().cloned().collect()
    }

    pub fn is_midconvex(&self, x: &Set) -> bool {
        self.is_midconvex_in(x, &self.all())
    }

    pub fn difference_set(&self, x: &Set) -> Set {
        x.iter()
            .flat_map(|a| x.iter().map(move |b| self.sub(a, b)))
            .collect()
    }

    pub fn is_subgroup(&self, x: &Set) -> bool {
        !x.is_empty()
            && x.iter()
                .all(|a| x.iter().all(|b| x.contains(&self.sub(a, b))))
    }

    /// Every subset, as the bitmask over this oracle's element order.
    pub fn subsets(&self) -> impl Iterator<Item = Set> + '_ {
        let n = self.elems.len();
        assert!(n < 32, "too many subsets to enumerate");
        (0u64..1 << n).map(move |m| {
            (0..n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| self.elems[i].clone())
                .collect()
        })
    }

    pub fn subgroups(&self) -> Vec<Set> {
        self.subsets().filter(|s| self.is_subgroup(s)).collect()
    }

    /// `{z : 2z = s}`.
    pub fn half_set(&self, s: &[u64]) -> Set {
        self.elems
            .iter()
            .filter(|z| self.add(z, z) == s)
            .cloned()
            .collect()
    }
}

pub fn to_bits(group: &GroupSpec, set: &Set) -> SubsetBits {
    let elems: Vec<_> = set.iter().map(|t| group.element(t).unwrap()).collect();
    SubsetBits::from_elements(group, &elems).unwrap()
}

pub fn from_bits(bits: &SubsetBits) -> Set {
    bits.elements()
        .iter()
        .map(|e| e.coords().to_vec())
        .collect()
}

pub fn group(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

pub fn set(g: &GroupSpec, lit: &str) -> SubsetBits {
    SubsetBits::parse_literal(g, lit).unwrap()
}
