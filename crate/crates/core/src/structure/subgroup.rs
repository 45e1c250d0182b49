use std::collections::HashSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec};
use crate::subsets::SubsetBits;

/// A subset verified to contain 0 and to be closed under `+` and `-`.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    bits: SubsetBits,
    generators: Option<Vec<Element>>,
}

/// `0 ∈ X` and `x - y ∈ X` for all `x, y ∈ X`.
pub fn is_subgroup(set: &SubsetBits) -> bool {
    let g = set.group();
    if !set.contains_index(0) {
        return false;
    }
    let members: Vec<usize> = set.indices().collect();
    members
        .iter()
        .all(|&x| members.iter().all(|&y| set.contains_index(g.sub_idx(x, y))))
}

impl Subgroup {
    /// Wraps `bits` after checking closure.
    pub fn new(bits: SubsetBits) -> Result<Self> {
        if !is_subgroup(&bits) {
            return Err(Error::NotSubgroup);
        }
        Ok(Subgroup {
            bits,
            generators: None,
        })
    }

    pub(crate) fn new_unchecked(bits: SubsetBits, generators: Option<Vec<Element>>) -> Self {
        debug_assert!(is_subgroup(&bits));
        Subgroup { bits, generators }
    }

    pub fn trivial(group: &GroupSpec) -> Self {
        let bits = SubsetBits::from_indices(group, [0]).expect("0 is always valid");
        Subgroup {
            bits,
            generators: Some(Vec::new()),
        }
    }

    pub fn whole(group: &GroupSpec) -> Self {
        Subgroup {
            bits: SubsetBits::full(group),
            generators: None,
        }
    }

    /// `{n·a : 0 <= n < ord(a)}`.
    pub fn cyclic(group: &GroupSpec, a: &Element) -> Result<Self> {
        let start = group.index_of(a)?;
        let mut bits = SubsetBits::try_empty(group)?;
        let mut cur = 0usize;
        loop {
            bits.insert_index(cur);
            cur = group.add_idx(cur, start);
            if cur == 0 {
                break;
            }
        }
        Ok(Subgroup {
            bits,
            generators: Some(vec![a.clone()]),
        })
    }

    /// The smallest subgroup containing `gens`.
    pub fn generated(group: &GroupSpec, gens: &[Element]) -> Result<Self> {
        let idx = gens
            .iter()
            .map(|e| group.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        let seed = SubsetBits::from_indices(group, [0])?;
        Ok(Subgroup {
            bits: closure(&seed, &idx),
            generators: Some(gens.to_vec()),
        })
    }

    pub fn bits(&self) -> &SubsetBits {
        &self.bits
    }

    pub fn into_bits(self) -> SubsetBits {
        self.bits
    }

    pub fn group(&self) -> &GroupSpec {
        self.bits.group()
    }

    pub fn generators(&self) -> Option<&[Element]> {
        self.generators.as_deref()
    }

    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: &Element) -> Result<bool> {
        self.bits.contains(e)
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits.contains_index(i)
    }

    /// The coset `H + g`.
    pub fn coset(&self, g: &Element) -> Result<SubsetBits> {
        self.bits.shift(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool> {
        self.bits.is_subset_of(&other.bits)
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup({:?})", self.bits)
    }
}

/// Closure of `seed` under adding and subtracting the generators.
fn closure(seed: &SubsetBits, gens: &[usize]) -> SubsetBits {
    let g = seed.group();
    let mut bits = seed.clone();
    let mut queue: VecDeque<usize> = seed.indices().collect();
    while let Some(e) = queue.pop_front() {
        for &s in gens {
            for next in [g.add_idx(e, s), g.sub_idx(e, s)] {
                if !bits.contains_index(next) {
                    bits.insert_index(next);
                    queue.push_back(next);
                }
            }
        }
    }
    bits
}

/// Every subgroup of `group` exactly once, sorted by order and then by
/// bitset. Subgroups are grown one generator at a time from the trivial
/// subgroup and deduplicated by their bitsets.
pub fn all_subgroups(group: &GroupSpec, cap: u64) -> Result<Vec<Subgroup>> {
    group.check_cap(cap)?;
    let trivial = Subgroup::trivial(group);
    let mut seen: HashSet<SubsetBits> = HashSet::new();
    seen.insert(trivial.bits.clone());
    let mut found = vec![trivial];
    let mut next = 0;
    while next < found.len() {
        let base = found[next].clone();
        next += 1;
        for e in 0..group.order() as usize {
            if base.bits.contains_index(e) {
                continue;
            }
            let grown = closure(&base.bits, &[e]);
            if seen.insert(grown.clone()) {
                let mut gens = base.generators.clone().unwrap_or_default();
                gens.push(group.element_unchecked(e));
                found.push(Subgroup {
                    bits: grown,
                    generators: Some(gens),
                });
            }
        }
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.bits.indices().cmp(b.bits.indices()))
    });
    Ok(found)
}

/// Whether `H / P` has an element of even order.
///
/// Decided as "some `h ∈ H ∖ P` has `2h ∈ P`", i.e. the quotient has an
/// element of order 2. For finite quotients this is equivalent: an element
/// of order `2m` yields the order-2 element `m·h`. Valid for finite `H`
/// only.
pub fn quotient_has_even_order_element(h: &Subgroup, p: &Subgroup) -> Result<bool> {
    if !p.is_subgroup_of(h)? {
        return Err(Error::NotInAmbient);
    }
    let g = h.group();
    Ok(h.bits
        .indices()
        .any(|x| !p.contains_index(x) && p.contains_index(g.double_idx(x))))
}
