//! Traces of a set along cyclic directions, and the trace criterion for
//! midconvexity restricted to finite groups.
//!
//! For `x ∈ X` and `g ∈ G` the trace is `{n ∈ Z : x + n·g ∈ X}`. In an
//! arbitrary Abelian group, `X` is midconvex iff every such trace equals
//! `C ∩ H` for an order-convex `C ⊆ Z` and a subgroup `H ⊆ Z` such that
//! `Z / H` has no element of even order.
//!
//! In a finite group the trace is periodic with period `ord(g)` and contains
//! 0, so it is unbounded in both directions, and the only order-convex
//! subset of `Z` containing it is `Z` itself. The criterion therefore
//! collapses to: the trace is `dZ` for an odd `d` (`d = 0` is impossible for
//! a periodic set, and `Z / dZ` has no element of even order iff `d` is
//! odd). [`midconvex_via_traces`] implements exactly that, and the test
//! suite checks it against the direct pair-scan definition.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::Element;
use crate::subsets::SubsetBits;

/// The periodic set `{n ∈ Z : n mod modulus ∈ residues}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZTrace {
    modulus: u64,
    residues: Vec<bool>,
}

impl ZTrace {
    pub fn new(modulus: u64, residues: &[u64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Precondition(
                "trace modulus must be at least 1".into(),
            ));
        }
        let mut bits = vec![false; modulus as usize];
        for &r in residues {
            if r >= modulus {
                return Err(Error::Precondition(format!(
                    "residue {r} out of range for modulus {modulus}"
                )));
            }
            bits[r as usize] = true;
        }
        Ok(ZTrace {
            modulus,
            residues: bits,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> Vec<u64> {
        (0..self.modulus)
            .filter(|&r| self.residues[r as usize])
            .collect()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.residues[n.rem_euclid(self.modulus as i64) as usize]
    }
}

impl fmt::Display for ZTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> = self.residues().iter().map(u64::to_string).collect();
        write!(f, "{{{}}} mod {}", rs.join(","), self.modulus)
    }
}

/// The order-convex factor of a trace decomposition. For periodic traces it
/// is always the whole line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexPart {
    WholeLine,
}

/// A trace equal to `dZ ∩ C` with `d` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceDecomposition {
    pub d: u64,
    pub convex_part: ConvexPart,
}

/// `{n : x + n·g ∈ X}` with modulus `ord(g)`. Errors if `x ∉ X`.
pub fn trace(set: &SubsetBits, x: &Element, g: &Element) -> Result<ZTrace> {
    let group = set.group();
    if !set.contains(x)? {
        return Err(Error::NotAMember);
    }
    let m = group.element_order(g)?;
    let step = group.index_of(g)?;
    let mut cur = group.index_of(x)?;
    let mut residues = Vec::with_capacity(m as usize);
    for _ in 0..m {
        residues.push(set.contains_index(cur));
        cur = group.add_idx(cur, step);
    }
    Ok(ZTrace {
        modulus: m,
        residues,
    })
}

/// Present iff the trace denotes `dZ` for some odd `d` dividing the
/// modulus; `d` is then the smallest positive element.
pub fn decompose_trace(t: &ZTrace) -> Option<TraceDecomposition> {
    if !t.residues[0] {
        return None;
    }
    let m = t.modulus;
    let d = (1..=m).find(|&n| t.residues[(n % m) as usize])?;
    if !m.is_multiple_of(d) || d % 2 == 0 {
        return None;
    }
    let is_dz = (0..m).all(|r| t.residues[r as usize] == (r % d == 0));
    is_dz.then_some(TraceDecomposition {
        d,
        convex_part: ConvexPart::WholeLine,
    })
}

/// Midconvexity in the whole (finite) group, decided through traces.
pub fn midconvex_via_traces(set: &SubsetBits) -> bool {
    let group = set.group();
    set.indices().all(|x| {
        let x = group.element_unchecked(x);
        group.elements().all(|g| {
            let t = trace(set, &x, &g).expect("x is a member");
            decompose_trace(&t).is_some()
        })
    })
}

/// Whether `s` is a contiguous run of integers (or empty). Every member must
/// lie in `[lo, hi]`.
pub fn is_order_convex_window(s: &[i64], lo: i64, hi: i64) -> Result<bool> {
    if let Some(&bad) = s.iter().find(|&&v| v < lo || v > hi) {
        return Err(Error::Precondition(format!(
            "{bad} lies outside the window [{lo}, {hi}]"
        )));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted.windows(2).all(|w| w[1] == w[0] + 1))
}
