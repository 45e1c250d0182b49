//! Finite Abelian groups presented as products of cyclic groups.
//!
//! A [`GroupSpec`] is `Z<n1> x Z<n2> x ... x Z<nk>`. Elements are residue
//! tuples ([`Element`]), and every element also has a mixed-radix index in
//! `[0, N)` with the **last coordinate varying fastest**. All bitset layers
//! ([`crate::SubsetBits`] and everything above it) address elements by that
//! index, so the ordering is part of the public contract.
//!
//! No normal-form canonicalization is attempted: `Z6` and `Z2xZ3` are
//! different specs with different indexings.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default cap on the group order for exhaustive entry points.
pub const DEFAULT_CAP: u64 = 24;

/// Largest order for which a full Cayley table is cached.
const TABLE_LIMIT: u64 = 256;

/// Largest order for which subsets can be materialized as bitsets.
pub const MAX_BITSET_ORDER: u64 = 1 << 26;

#[derive(Debug)]
struct Inner {
    orders: Vec<u64>,
    weights: Vec<u64>,
    total: u64,
    add_table: Option<Vec<u32>>,
    neg_table: Option<Vec<u32>>,
}

/// A finite Abelian group `Z<n1> x ... x Z<nk>`.
///
/// Cheap to clone; the presentation and the cached operation table are
/// shared.
#[derive(Clone)]
pub struct GroupSpec(Arc<Inner>);

/// A group element as a tuple of residues, one per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<u64>,
}

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl GroupSpec {
    /// Builds `Z<o1> x ... x Z<ok>`. Factors of order 1 are dropped; order 0
    /// is rejected.
    pub fn new(orders: &[u64]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::ZeroOrder);
        }
        let orders: Vec<u64> = orders.iter().copied().filter(|&o| o > 1).collect();
        let total = orders
            .iter()
            .try_fold(1u64, |acc, &o| acc.checked_mul(o))
            .ok_or(Error::OrderOverflow)?;
        let mut weights = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * orders[i + 1];
        }
        let mut inner = Inner {
            orders,
            weights,
            total,
            add_table: None,
            neg_table: None,
        };
        if total <= TABLE_LIMIT {
            let n = total as usize;
            let mut table = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    table[i * n + j] = slow_add(&inner, i as u64, j as u64) as u32;
                }
            }
            let neg = (0..n)
                .map(|i| (0..n).find(|&j| table[i * n + j] == 0).unwrap() as u32)
                .collect();
            inner.add_table = Some(table);
            inner.neg_table = Some(neg);
        }
        Ok(GroupSpec(Arc::new(inner)))
    }

    /// The cyclic group `Z<n>`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("trivial group")
    }

    pub fn orders(&self) -> &[u64] {
        &self.0.orders
    }

    pub fn rank(&self) -> usize {
        self.0.orders.len()
    }

    /// The group order `N`.
    pub fn order(&self) -> u64 {
        self.0.total
    }

    /// Errors unless `N <= cap`.
    pub fn check_cap(&self, cap: u64) -> Result<()> {
        if self.order() > cap {
            return Err(Error::CapExceeded {
                order: self.order(),
                cap,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> Element {
        Element {
            coords: vec![0; self.rank()],
        }
    }

    /// Builds an element from residues that must already be reduced.
    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        self.check_dim(coords.len())?;
        for (&c, &o) in coords.iter().zip(self.orders()) {
            if c >= o {
                return Err(Error::CoordinateOutOfRange { coord: c, order: o });
            }
        }
        Ok(Element {
            coords: coords.to_vec(),
        })
    }

    /// Builds an element from arbitrary integers, reducing each modulo its
    /// factor.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<Element> {
        self.check_dim(coords.len())?;
        let coords = coords
            .iter()
            .zip(self.orders())
            .map(|(&c, &o)| (c as i128).rem_euclid(o as i128) as u64)
            .collect();
        Ok(Element { coords })
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found,
            });
        }
        Ok(())
    }

    fn check(&self, a: &Element) -> Result<()> {
        self.check_dim(a.coords.len())?;
        for (&c, &o) in a.coords.iter().zip(self.orders()) {
            if c >= o {
                return Err(Error::CoordinateOutOfRange { coord: c, order: o });
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(self.orders())
            .map(|((&x, &y), &o)| ((x as u128 + y as u128) % o as u128) as u64)
            .collect();
        Ok(Element { coords })
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        let coords = a
            .coords
            .iter()
            .zip(self.orders())
            .map(|(&x, &o)| if x == 0 { 0 } else { o - x })
            .collect();
        Ok(Element { coords })
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.add(a, &self.neg(b)?)
    }

    /// The `m`-fold sum of `a`; negative `m` multiplies the negation.
    pub fn scalar_mul(&self, m: i64, a: &Element) -> Result<Element> {
        self.check(a)?;
        let coords = a
            .coords
            .iter()
            .zip(self.orders())
            .map(|(&x, &o)| ((x as i128) * (m as i128)).rem_euclid(o as i128) as u64)
            .collect();
        Ok(Element { coords })
    }

    /// Smallest `n >= 1` with `n·a = 0`.
    pub fn element_order(&self, a: &Element) -> Result<u64> {
        self.check(a)?;
        Ok(a.coords
            .iter()
            .zip(self.orders())
            .fold(1u64, |acc, (&c, &o)| acc.lcm(&(o / o.gcd(&c)))))
    }

    /// Mixed-radix index, last coordinate fastest.
    pub fn index_of(&self, a: &Element) -> Result<usize> {
        self.check(a)?;
        Ok(encode(&self.0, &a.coords) as usize)
    }

    pub fn element_at(&self, index: u64) -> Result<Element> {
        if index >= self.order() {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order(),
            });
        }
        Ok(Element {
            coords: decode(&self.0, index),
        })
    }

    /// All elements in index order. Errors when `N > cap`.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Element>> {
        self.check_cap(cap)?;
        Ok(self.elements().collect())
    }

    /// Uncapped iterator over all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(move |i| Element {
            coords: decode(&self.0, i),
        })
    }

    // Index-level arithmetic used by the bitset layers. Callers guarantee
    // indices are in range.

    #[inline]
    pub(crate) fn add_idx(&self, i: usize, j: usize) -> usize {
        match &self.0.add_table {
            Some(t) => t[i * self.0.total as usize + j] as usize,
            None => slow_add(&self.0, i as u64, j as u64) as usize,
        }
    }

    #[inline]
    pub(crate) fn neg_idx(&self, i: usize) -> usize {
        if let Some(t) = &self.0.neg_table {
            return t[i] as usize;
        }
        let coords: Vec<u64> = decode(&self.0, i as u64)
            .into_iter()
            .zip(self.orders())
            .map(|(x, &o)| if x == 0 { 0 } else { o - x })
            .collect();
        encode(&self.0, &coords) as usize
    }

    #[inline]
    pub(crate) fn sub_idx(&self, i: usize, j: usize) -> usize {
        self.add_idx(i, self.neg_idx(j))
    }

    #[inline]
    pub(crate) fn double_idx(&self, i: usize) -> usize {
        self.add_idx(i, i)
    }

    pub(crate) fn index_unchecked(&self, a: &Element) -> usize {
        encode(&self.0, &a.coords) as usize
    }

    pub(crate) fn element_unchecked(&self, i: usize) -> Element {
        Element {
            coords: decode(&self.0, i as u64),
        }
    }

    /// Parses an element literal: `(3,1)`, or a bare integer for rank-1
    /// groups. `()` and `0` both denote the identity of the trivial group.
    /// Coordinates are reduced modulo their factor.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let t = s.trim();
        let inner = match t.strip_prefix('(') {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(t, "unbalanced parenthesis"))?,
            None => t,
        };
        let parts: Vec<&str> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(str::trim).collect()
        };
        if self.rank() == 0 && (parts.is_empty() || parts == ["0"]) {
            return Ok(self.zero());
        }
        if parts.len() != self.rank() {
            return Err(Error::parse(
                t,
                format!("expected {} coordinate(s) for {self}", self.rank()),
            ));
        }
        let coords = parts
            .iter()
            .map(|p| {
                p.parse::<i64>()
                    .map_err(|_| Error::parse(*p, "not an integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        self.element_reduced(&coords)
    }
}

fn encode(inner: &Inner, coords: &[u64]) -> u64 {
    coords
        .iter()
        .zip(&inner.weights)
        .map(|(&c, &w)| c * w)
        .sum()
}

fn decode(inner: &Inner, mut index: u64) -> Vec<u64> {
    let mut coords = vec![0; inner.orders.len()];
    for i in (0..inner.orders.len()).rev() {
        coords[i] = index % inner.orders[i];
        index /= inner.orders[i];
    }
    coords
}

fn slow_add(inner: &Inner, i: u64, j: u64) -> u64 {
    let a = decode(inner, i);
    let b = decode(inner, j);
    let sum: Vec<u64> = a
        .iter()
        .zip(&b)
        .zip(&inner.orders)
        .map(|((&x, &y), &o)| ((x as u128 + y as u128) % o as u128) as u64)
        .collect();
    encode(inner, &sum)
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.orders == other.0.orders
    }
}

impl Eq for GroupSpec {}

impl std::hash::Hash for GroupSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.orders.hash(state);
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({self})")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return f.write_str("Z1");
        }
        for (i, o) in self.orders().iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{o}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `Z<n>` factors joined by `x`, case-insensitive, e.g. `Z4xZ2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(s, "empty group spec"));
        }
        let mut orders = Vec::new();
        for factor in t.split(['x', 'X']) {
            let digits = factor
                .trim()
                .strip_prefix(['z', 'Z'])
                .ok_or_else(|| Error::parse(factor, "expected Z<n>"))?;
            let n: u64 = digits
                .parse()
                .map_err(|_| Error::parse(factor, "expected Z<n> with a positive integer n"))?;
            if n == 0 {
                return Err(Error::parse(factor, "factor order must be at least 1"));
            }
            orders.push(n);
        }
        GroupSpec::new(&orders).map_err(|e| Error::parse(t, e.to_string()))
    }
}
