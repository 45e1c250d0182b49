use crate::error::{Error, Result};
use crate::group::Element;
use crate::structure::subgroup::{is_subgroup, Subgroup};
use crate::subsets::{SubsetBits, Witness};

/// Diagnostic record of the two-coset construction for a violator `a`
/// (an `a ∈ X - X` with `2a ∉ X - X`).
///
/// `d_window` is `{n : 1 <= n <= ord(a), n·a ∈ X - X}`; since `ord(a)·a = 0`
/// it always contains `ord(a)`, so in a finite group `n_min` is always
/// present. `h_a` is generated by `g = (n_min + 1)·a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOneTrace {
    pub a: Element,
    pub d_window: Vec<u64>,
    pub n_min: Option<u64>,
    pub g: Option<Element>,
    pub c_a: Subgroup,
    pub h_a: Subgroup,
    pub x: Element,
}

impl LemmaOneTrace {
    /// `1 ∈ D`, `2 ∉ D`, and `n_min >= 3` when present.
    pub fn invariants_hold(&self) -> bool {
        self.d_window.contains(&1)
            && !self.d_window.contains(&2)
            && self.n_min.is_none_or(|n| n >= 3)
    }

    /// Checks `X ∩ (C_a + y) = (H_a + y) ∪ (H_a + y + a)` for every base
    /// point `y ∈ X ∩ (X - a)`, by direct set computation.
    pub fn restriction_claim_holds(&self, set: &SubsetBits) -> Result<bool> {
        let g = set.group();
        let a = g.index_of(&self.a)?;
        let bases = set.intersection(&set.shift_idx(g.neg_idx(a)))?;
        for y in bases.indices() {
            let lhs = set.intersection(&self.c_a.bits().shift_idx(y))?;
            let h_y = self.h_a.bits().shift_idx(y);
            let rhs = h_y.union(&h_y.shift_idx(a))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Output of [`two_coset_extract`]: `X = (H + x) ∪ (H + x + a)`.
#[derive(Debug, Clone)]
pub struct TwoCosetExtraction {
    pub h: Subgroup,
    pub x: Element,
    pub trace: LemmaOneTrace,
}

/// The main theorem's outcome for one set.
#[derive(Debug, Clone)]
pub enum Decomposition {
    NotSemiaffine {
        witness: Witness,
    },
    /// `X = (H + a) ∪ (H + b)` with `a, b ∈ X`.
    TwoCosets {
        h: Subgroup,
        a: Element,
        b: Element,
        lemma: Box<LemmaOneTrace>,
    },
    /// `X = (H ∖ C) + g` with `C` midconvex in `H`.
    CosetMinusMidconvex {
        h: Subgroup,
        c: SubsetBits,
        g: Element,
    },
}

/// A classified set together with the set itself and its affinity flag.
#[derive(Debug, Clone)]
pub struct Classification {
    pub set: SubsetBits,
    pub affine: bool,
    pub decomposition: Decomposition,
}

impl Classification {
    pub fn is_semiaffine(&self) -> bool {
        !matches!(self.decomposition, Decomposition::NotSemiaffine { .. })
    }

    pub fn variant_name(&self) -> &'static str {
        match self.decomposition {
            Decomposition::NotSemiaffine { .. } => "not_semiaffine",
            Decomposition::TwoCosets { .. } => "two_cosets",
            Decomposition::CosetMinusMidconvex { .. } => "coset_minus_midconvex",
        }
    }
}

/// If `X` is nonempty and affine, returns `(H, g)` with `g` the
/// smallest-index member and `H = X - g` a subgroup, so `X = H + g`.
pub fn affine_decompose(set: &SubsetBits) -> Option<(Subgroup, Element)> {
    let g = set.first_index()?;
    let group = set.group();
    let h = set.shift_idx(group.neg_idx(g));
    let h = Subgroup::new(h).ok()?;
    Some((h, group.element_unchecked(g)))
}

/// Decomposes a semiaffine `X` along a violator `a` into two cosets.
///
/// `x` is the smallest-index element of `X ∩ (X - a)` and
/// `H = (X ∩ (X - a)) - x`. Errors with [`Error::Precondition`] unless `X`
/// is semiaffine, `a ∈ X - X` and `2a ∉ X - X`.
pub fn two_coset_extract(set: &SubsetBits, a: &Element) -> Result<TwoCosetExtraction> {
    let group = set.group();
    let ai = group.index_of(a)?;
    if !set.is_semiaffine() {
        return Err(Error::Precondition("set is not semiaffine".into()));
    }
    let diff = set.difference_set();
    if !diff.contains_index(ai) {
        return Err(Error::Precondition(format!("{a} is not in X - X")));
    }
    if diff.contains_index(group.double_idx(ai)) {
        return Err(Error::Precondition(format!("2·{a} is in X - X")));
    }

    let base = set.intersection(&set.shift_idx(group.neg_idx(ai)))?;
    let xi = base
        .first_index()
        .ok_or_else(|| Error::Invariant("X ∩ (X - a) is empty".into()))?;
    let h = Subgroup::new(base.shift_idx(group.neg_idx(xi)))
        .map_err(|_| Error::Invariant("(X ∩ (X - a)) - x is not a subgroup".into()))?;
    let hx = h.bits().shift_idx(xi);
    if hx.union(&hx.shift_idx(ai))? != *set {
        return Err(Error::Invariant(
            "(H + x) ∪ (H + x + a) differs from X".into(),
        ));
    }

    let ord = group.element_order(a)?;
    let mut d_window = Vec::new();
    let mut cur = 0usize;
    for n in 1..=ord {
        cur = group.add_idx(cur, ai);
        if diff.contains_index(cur) {
            d_window.push(n);
        }
    }
    let n_min = d_window.iter().copied().find(|&n| n != 1);
    let g = n_min
        .map(|n| group.scalar_mul(n as i64 + 1, a))
        .transpose()?;
    let h_a = match &g {
        Some(g) => Subgroup::cyclic(group, g)?,
        None => Subgroup::trivial(group),
    };
    let x = group.element_unchecked(xi);
    let trace = LemmaOneTrace {
        a: a.clone(),
        d_window,
        n_min,
        g,
        c_a: Subgroup::cyclic(group, a)?,
        h_a,
        x: x.clone(),
    };
    Ok(TwoCosetExtraction { h, x, trace })
}

/// Decomposes a nonempty, semiaffine, doubling-closed `X` as
/// `(H ∖ C) + g` with `H = X - X`, `g` the smallest-index member and
/// `C = H ∖ (X - g)`.
pub fn midconvex_complement_extract(set: &SubsetBits) -> Result<(Subgroup, SubsetBits, Element)> {
    let group = set.group();
    let gi = set
        .first_index()
        .ok_or_else(|| Error::Precondition("set is empty".into()))?;
    if !set.is_semiaffine() {
        return Err(Error::Precondition("set is not semiaffine".into()));
    }
    if !set.doubling_closed() {
        return Err(Error::Precondition(
            "X - X is not closed under doubling".into(),
        ));
    }
    let h = Subgroup::new(set.difference_set())
        .map_err(|_| Error::Invariant("X - X is not a subgroup".into()))?;
    let c = h.bits().difference(&set.shift_idx(group.neg_idx(gi)))?;
    if !c.is_midconvex(&h)? {
        return Err(Error::Invariant("H ∖ (X - g) is not midconvex in H".into()));
    }
    if h.bits().difference(&c)?.shift_idx(gi) != *set {
        return Err(Error::Invariant("(H ∖ C) + g differs from X".into()));
    }
    Ok((h, c, group.element_unchecked(gi)))
}

/// Classifies `X` by a fixed procedure:
///
/// 1. `X = ∅` gives `CosetMinusMidconvex { H = G, C = G, g = 0 }`;
/// 2. a semiaffinity violation gives `NotSemiaffine`;
/// 3. a smallest-index `a ∈ X - X` with `2a ∉ X - X` gives `TwoCosets`
///    with `a = x`, `b = x + a`;
/// 4. otherwise `CosetMinusMidconvex`.
///
/// The two canonical forms overlap (a single coset fits both), so the
/// result is canonical by procedure, not unique. `Err` is only returned
/// when an internal invariant fails.
pub fn classify(set: &SubsetBits) -> Result<Classification> {
    let group = set.group();
    let affine = set.is_affine();
    let decomposition = if set.is_empty() {
        Decomposition::CosetMinusMidconvex {
            h: Subgroup::whole(group),
            c: SubsetBits::full(group),
            g: group.zero(),
        }
    } else if let Some(witness) = set.semiaffine_witness() {
        Decomposition::NotSemiaffine { witness }
    } else if let Some(a) = set.doubling_violator() {
        let TwoCosetExtraction { h, x, trace } = two_coset_extract(set, &a)?;
        let b = group.add(&x, &a)?;
        Decomposition::TwoCosets {
            h,
            a: x,
            b,
            lemma: Box::new(trace),
        }
    } else {
        let (h, c, g) = midconvex_complement_extract(set)?;
        Decomposition::CosetMinusMidconvex { h, c, g }
    };
    Ok(Classification {
        set: set.clone(),
        affine,
        decomposition,
    })
}

/// Evaluates a decomposition: `(H + a) ∪ (H + b)` or `(H ∖ C) + g`.
pub fn reconstruct(c: &Classification) -> Result<SubsetBits> {
    reconstruct_decomposition(&c.decomposition)
}

pub fn reconstruct_decomposition(d: &Decomposition) -> Result<SubsetBits> {
    match d {
        Decomposition::NotSemiaffine { .. } => Err(Error::Precondition(
            "a non-semiaffine set has no decomposition".into(),
        )),
        Decomposition::TwoCosets { h, a, b, .. } => h.coset(a)?.union(&h.coset(b)?),
        Decomposition::CosetMinusMidconvex { h, c, g } => h.bits().difference(c)?.shift(g),
    }
}

/// `X - x` is a subgroup for every `x ∈ X`.
pub fn every_translate_is_subgroup(set: &SubsetBits) -> bool {
    let g = set.group();
    set.indices()
        .all(|x| is_subgroup(&set.shift_idx(g.neg_idx(x))))
}
