//! Subsets of a finite group as bitsets over element indices, and the three
//! defining predicates: affine, semiaffine and midconvex.
//!
//! Witness search is deterministic. Triples are scanned with `z` outermost,
//! then `x`, then `y`, each in ascending index order, and the first violation
//! is reported. Pairs for midconvexity are scanned as `x <= y`, and the
//! excluded midpoint is the smallest-index one.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, MAX_BITSET_ORDER};
use crate::structure::Subgroup;

/// A subset `X` of a group, one bit per element index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetBits {
    group: GroupSpec,
    words: Vec<u64>,
}

/// Which defining condition a [`Witness`] violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Affine,
    Semiaffine,
    Midconvex,
}

/// A counterexample to one of the defining conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `x, y, z ∈ X` but `x + y - z ∉ X`.
    Affine {
        x: Element,
        y: Element,
        z: Element,
        missing: Element,
    },
    /// `x, y, z ∈ X` but neither `x + y - z` nor `x - y + z` is in `X`.
    Semiaffine {
        x: Element,
        y: Element,
        z: Element,
        missing: [Element; 2],
    },
    /// `x, y ∈ X`, `2·midpoint = x + y` inside the ambient group, and
    /// `midpoint ∉ X`.
    Midconvex {
        x: Element,
        y: Element,
        midpoint: Element,
    },
}

impl Witness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            Witness::Affine { .. } => WitnessKind::Affine,
            Witness::Semiaffine { .. } => WitnessKind::Semiaffine,
            Witness::Midconvex { .. } => WitnessKind::Midconvex,
        }
    }

    /// Re-evaluates the defining condition and returns `true` if the
    /// violation is reproduced on `set`.
    pub fn replay(&self, set: &SubsetBits, ambient: Option<&Subgroup>) -> bool {
        let g = set.group();
        let member = |e: &Element| set.contains(e).unwrap_or(false);
        match self {
            Witness::Affine { x, y, z, missing } => {
                let Ok(t) = g.add(x, y).and_then(|s| g.sub(&s, z)) else {
                    return false;
                };
                member(x) && member(y) && member(z) && &t == missing && !member(&t)
            }
            Witness::Semiaffine { x, y, z, missing } => {
                let (Ok(p), Ok(q)) = (
                    g.add(x, y).and_then(|s| g.sub(&s, z)),
                    g.sub(x, y).and_then(|s| g.add(&s, z)),
                ) else {
                    return false;
                };
                member(x)
                    && member(y)
                    && member(z)
                    && [p.clone(), q.clone()] == *missing
                    && !member(&p)
                    && !member(&q)
            }
            Witness::Midconvex { x, y, midpoint } => {
                let in_ambient = match ambient {
                    Some(h) => h.contains(midpoint).unwrap_or(false),
                    None => true,
                };
                let (Ok(s), Ok(d)) = (g.add(x, y), g.add(midpoint, midpoint)) else {
                    return false;
                };
                member(x) && member(y) && in_ambient && s == d && !member(midpoint)
            }
        }
    }
}

impl fmt::Display for Witness {
    /// E.g. `x=1 y=2 z=0, missing 3 and 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Affine { x, y, z, missing } => {
                write!(f, "x={x} y={y} z={z}, missing {missing}")
            }
            Witness::Semiaffine { x, y, z, missing } => {
                write!(
                    f,
                    "x={x} y={y} z={z}, missing {} and {}",
                    missing[0], missing[1]
                )
            }
            Witness::Midconvex { x, y, midpoint } => {
                write!(f, "x={x} y={y}, missing midpoint {midpoint}")
            }
        }
    }
}

impl SubsetBits {
    fn alloc(group: &GroupSpec) -> Vec<u64> {
        let n = group.order();
        assert!(
            n <= MAX_BITSET_ORDER,
            "group of order {n} is too large to materialize as a bitset"
        );
        vec![0; (n as usize).div_ceil(64)]
    }

    /// Errors when the group is too large to hold as a bitset.
    pub fn try_empty(group: &GroupSpec) -> Result<Self> {
        if group.order() > MAX_BITSET_ORDER {
            return Err(Error::TooLarge {
                order: group.order(),
            });
        }
        Ok(Self::empty(group))
    }

    /// # Panics
    /// If `group.order()` exceeds [`MAX_BITSET_ORDER`].
    pub fn empty(group: &GroupSpec) -> Self {
        SubsetBits {
            group: group.clone(),
            words: Self::alloc(group),
        }
    }

    pub fn full(group: &GroupSpec) -> Self {
        let mut s = Self::empty(group);
        for i in 0..group.order() as usize {
            s.insert_index(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        group: &GroupSpec,
        indices: I,
    ) -> Result<Self> {
        let mut s = Self::try_empty(group)?;
        for i in indices {
            if i as u64 >= group.order() {
                return Err(Error::IndexOutOfRange {
                    index: i as u64,
                    order: group.order(),
                });
            }
            s.insert_index(i);
        }
        Ok(s)
    }

    pub fn from_elements<'a, I: IntoIterator<Item = &'a Element>>(
        group: &GroupSpec,
        elements: I,
    ) -> Result<Self> {
        let mut s = Self::try_empty(group)?;
        for e in elements {
            s.insert_index(group.index_of(e)?);
        }
        Ok(s)
    }

    /// Decodes a subset index: bit `i` of `mask` is element index `i`.
    /// Requires `N <= 64` and no bits at or above `N`.
    pub fn from_mask(group: &GroupSpec, mask: u64) -> Result<Self> {
        let n = group.order();
        if n > 64 {
            return Err(Error::Unsupported(format!(
                "subset masks need N <= 64, group has order {n}"
            )));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - mask.leading_zeros() as u64,
                order: n,
            });
        }
        Ok(SubsetBits {
            group: group.clone(),
            words: vec![mask],
        })
    }

    /// Inverse of [`SubsetBits::from_mask`]; `None` when `N > 64`.
    pub fn mask(&self) -> Option<u64> {
        (self.group.order() <= 64).then(|| self.words[0])
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn contains(&self, e: &Element) -> Result<bool> {
        Ok(self.contains_index(self.group.index_of(e)?))
    }

    #[inline]
    pub fn insert_index(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove_index(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn elements(&self) -> Vec<Element> {
        self.indices()
            .map(|i| self.group.element_unchecked(i))
            .collect()
    }

    /// Smallest member index.
    pub fn first_index(&self) -> Option<usize> {
        self.indices().next()
    }

    fn same_group(&self, other: &SubsetBits) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        Ok(())
    }

    fn zip_words(&self, other: &SubsetBits, f: impl Fn(u64, u64) -> u64) -> Result<SubsetBits> {
        self.same_group(other)?;
        Ok(SubsetBits {
            group: self.group.clone(),
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &SubsetBits) -> Result<SubsetBits> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SubsetBits) -> Result<SubsetBits> {
        self.zip_words(other, |a, b| a & b)
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &SubsetBits) -> Result<SubsetBits> {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> SubsetBits {
        let full = SubsetBits::full(&self.group);
        full.difference(self).expect("same group")
    }

    pub fn is_subset_of(&self, other: &SubsetBits) -> Result<bool> {
        self.same_group(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0))
    }

    pub(crate) fn shift_idx(&self, t: usize) -> SubsetBits {
        let mut out = SubsetBits::empty(&self.group);
        for i in self.indices() {
            out.insert_index(self.group.add_idx(i, t));
        }
        out
    }

    /// `X + g`: `x ∈ X + g` iff `x - g ∈ X`.
    pub fn shift(&self, g: &Element) -> Result<SubsetBits> {
        Ok(self.shift_idx(self.group.index_of(g)?))
    }

    /// `X - X = {x - y : x, y ∈ X}`.
    pub fn difference_set(&self) -> SubsetBits {
        let members: Vec<usize> = self.indices().collect();
        let mut out = SubsetBits::empty(&self.group);
        for &x in &members {
            for &y in &members {
                out.insert_index(self.group.sub_idx(x, y));
            }
        }
        out
    }

    /// First affine violation, if any.
    pub fn affine_witness(&self) -> Option<Witness> {
        let g = &self.group;
        let members: Vec<usize> = self.indices().collect();
        for &z in &members {
            let nz = g.neg_idx(z);
            for &x in &members {
                let xz = g.add_idx(x, nz);
                for &y in &members {
                    let t = g.add_idx(xz, y);
                    if !self.contains_index(t) {
                        return Some(Witness::Affine {
                            x: g.element_unchecked(x),
                            y: g.element_unchecked(y),
                            z: g.element_unchecked(z),
                            missing: g.element_unchecked(t),
                        });
                    }
                }
            }
        }
        None
    }

    /// `∀ x, y, z ∈ X: x + y - z ∈ X`. The empty set is affine.
    pub fn is_affine(&self) -> bool {
        self.affine_witness().is_none()
    }

    /// First semiaffine violation, if any.
    pub fn semiaffine_witness(&self) -> Option<Witness> {
        let g = &self.group;
        let members: Vec<usize> = self.indices().collect();
        for &z in &members {
            let nz = g.neg_idx(z);
            for &x in &members {
                let xz = g.add_idx(x, nz);
                let xpz = g.add_idx(x, z);
                for &y in &members {
                    let p = g.add_idx(xz, y);
                    if self.contains_index(p) {
                        continue;
                    }
                    let q = g.sub_idx(xpz, y);
                    if !self.contains_index(q) {
                        return Some(Witness::Semiaffine {
                            x: g.element_unchecked(x),
                            y: g.element_unchecked(y),
                            z: g.element_unchecked(z),
                            missing: [g.element_unchecked(p), g.element_unchecked(q)],
                        });
                    }
                }
            }
        }
        None
    }

    /// `∀ x, y, z ∈ X: x + (y - z) ∈ X or x - (y - z) ∈ X`.
    pub fn is_semiaffine(&self) -> bool {
        self.semiaffine_witness().is_none()
    }

    /// First midconvex violation inside `ambient`, if any. The half-sets
    /// `{z ∈ H : 2z = x + y}` are taken in the ambient subgroup `H`, not in
    /// the whole group.
    pub fn midconvex_witness(&self, ambient: &Subgroup) -> Result<Option<Witness>> {
        if !self.is_subset_of(ambient.bits())? {
            return Err(Error::NotInAmbient);
        }
        let g = &self.group;
        let mut halves: Vec<Vec<usize>> = vec![Vec::new(); g.order() as usize];
        for z in ambient.bits().indices() {
            halves[g.double_idx(z)].push(z);
        }
        let members: Vec<usize> = self.indices().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                let s = g.add_idx(x, y);
                if let Some(&m) = halves[s].iter().find(|&&m| !self.contains_index(m)) {
                    return Ok(Some(Witness::Midconvex {
                        x: g.element_unchecked(x),
                        y: g.element_unchecked(y),
                        midpoint: g.element_unchecked(m),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// `∀ x, y ∈ X: {z ∈ H : 2z = x + y} ⊆ X`. Errors if `X ⊄ H`.
    pub fn is_midconvex(&self, ambient: &Subgroup) -> Result<bool> {
        Ok(self.midconvex_witness(ambient)?.is_none())
    }

    /// The smallest-index `a ∈ X - X` with `2a ∉ X - X`, if any.
    pub fn doubling_violator(&self) -> Option<Element> {
        self.doubling_violator_idx()
            .map(|a| self.group.element_unchecked(a))
    }

    pub(crate) fn doubling_violator_idx(&self) -> Option<usize> {
        let diff = self.difference_set();
        let found = diff
            .indices()
            .find(|&a| !diff.contains_index(self.group.double_idx(a)));
        found
    }

    /// `∀ a ∈ X - X: 2a ∈ X - X`.
    pub fn doubling_closed(&self) -> bool {
        self.doubling_violator_idx().is_none()
    }

    /// Bitset as hex, one byte per 8 element indices, bytes in little-endian
    /// order (the first two digits hold indices 0..8).
    pub fn to_hex(&self) -> String {
        let nbytes = (self.group.order() as usize).div_ceil(8);
        let bytes: Vec<u8> = self.words.iter().flat_map(|w| w.to_le_bytes()).collect();
        hex::encode(&bytes[..nbytes])
    }

    /// Inverse of [`SubsetBits::to_hex`]. Missing trailing bytes are zero.
    pub fn from_hex(group: &GroupSpec, digits: &str) -> Result<Self> {
        let t = digits.trim();
        let bytes = hex::decode(t).map_err(|e| Error::parse(t, e.to_string()))?;
        let mut s = Self::try_empty(group)?;
        for (b, byte) in bytes.iter().enumerate() {
            for bit in 0..8 {
                if byte >> bit & 1 == 1 {
                    let i = 8 * b + bit;
                    if i as u64 >= group.order() {
                        return Err(Error::parse(
                            t,
                            format!("bit {i} set but the group has order {}", group.order()),
                        ));
                    }
                    s.insert_index(i);
                }
            }
        }
        Ok(s)
    }

    /// Parses `{1,2,4,5}` or `{(0,1),(1,0)}`; `{}` is the empty set.
    pub fn parse_literal(group: &GroupSpec, literal: &str) -> Result<Self> {
        let t = literal.trim();
        let body = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(t, "set literal must be enclosed in braces"))?;
        let mut s = Self::try_empty(group)?;
        for tok in split_top_level(body)? {
            let e = group.parse_element(tok)?;
            s.insert_index(group.index_unchecked(&e));
        }
        Ok(s)
    }
}

/// `{z ∈ G : 2z = s}`. Either empty or a coset of the 2-torsion subgroup.
pub fn half_set(group: &GroupSpec, s: &Element) -> Result<SubsetBits> {
    let target = group.index_of(s)?;
    let mut out = SubsetBits::try_empty(group)?;
    for z in 0..group.order() as usize {
        if group.double_idx(z) == target {
            out.insert_index(z);
        }
    }
    Ok(out)
}

fn split_top_level(body: &str) -> Result<Vec<&str>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(body, "unbalanced parenthesis"));
                }
            }
            ',' if depth == 0 => {
                parts.push(body[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(body, "unbalanced parenthesis"));
    }
    parts.push(body[start..].trim());
    if let Some(bad) = parts.iter().find(|p| p.is_empty()) {
        return Err(Error::parse(*bad, "empty element in set literal"));
    }
    Ok(parts)
}

impl fmt::Display for SubsetBits {
    /// The canonical set literal, members in index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.group.element_unchecked(i))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, self)
    }
}
