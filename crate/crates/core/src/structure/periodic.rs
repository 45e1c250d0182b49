//! Characterizations specific to finite (hence periodic) groups: midconvex
//! sets are cosets of subgroups with odd-exponent quotient, and semiaffine
//! sets are either two cosets or `(H ∖ P) + g` for subgroups `P ⊆ H`.

use crate::error::{Error, Result};
use crate::group::Element;
use crate::structure::classify::{classify, Decomposition};
use crate::structure::subgroup::{is_subgroup, quotient_has_even_order_element, Subgroup};
use crate::subsets::{SubsetBits, Witness};

/// `X ⊆ H` is midconvex in `H` iff it is empty, or `P = X - x` (with `x` the
/// smallest-index member) is a subgroup and `H / P` has no element of even
/// order.
pub fn periodic_midconvex_check(set: &SubsetBits, ambient: &Subgroup) -> Result<bool> {
    if !set.is_subset_of(ambient.bits())? {
        return Err(Error::NotInAmbient);
    }
    let Some(x) = set.first_index() else {
        return Ok(true);
    };
    let p = set.shift_idx(set.group().neg_idx(x));
    if !is_subgroup(&p) {
        return Ok(false);
    }
    let p = Subgroup::new_unchecked(p, None);
    Ok(!quotient_has_even_order_element(ambient, &p)?)
}

/// Semiaffine classification in the subgroup form.
#[derive(Debug, Clone)]
pub enum PeriodicForm {
    NotSemiaffine {
        witness: Witness,
    },
    TwoCosets {
        h: Subgroup,
        a: Element,
        b: Element,
    },
    /// `X = (H ∖ P) + g`; `p = None` stands for `P = ∅`, i.e. `X = H + g`.
    CosetMinusSubgroup {
        h: Subgroup,
        p: Option<Subgroup>,
        g: Element,
    },
}

/// Runs [`classify`] and, in the midconvex branch, rewrites the midconvex
/// `C` as a coset `P + c` (`c` its smallest-index member) and absorbs the
/// offset: `(H ∖ (P + c)) + g = (H ∖ P) + (g + c)`.
pub fn periodic_semiaffine_classify(set: &SubsetBits) -> Result<PeriodicForm> {
    let group = set.group();
    let form = match classify(set)?.decomposition {
        Decomposition::NotSemiaffine { witness } => PeriodicForm::NotSemiaffine { witness },
        Decomposition::TwoCosets { h, a, b, .. } => PeriodicForm::TwoCosets { h, a, b },
        Decomposition::CosetMinusMidconvex { h, c, g } => match c.first_index() {
            None => PeriodicForm::CosetMinusSubgroup { h, p: None, g },
            Some(ci) => {
                let p = Subgroup::new(c.shift_idx(group.neg_idx(ci)))
                    .map_err(|_| Error::Invariant("midconvex C is not a coset".into()))?;
                if quotient_has_even_order_element(&h, &p)? {
                    return Err(Error::Invariant(
                        "H / P has an element of even order".into(),
                    ));
                }
                let g = group.add(&g, &group.element_unchecked(ci))?;
                PeriodicForm::CosetMinusSubgroup { h, p: Some(p), g }
            }
        },
    };
    if !matches!(form, PeriodicForm::NotSemiaffine { .. }) && reconstruct_periodic(&form)? != *set {
        return Err(Error::Invariant(
            "periodic form does not reconstruct X".into(),
        ));
    }
    Ok(form)
}

pub fn reconstruct_periodic(form: &PeriodicForm) -> Result<SubsetBits> {
    match form {
        PeriodicForm::NotSemiaffine { .. } => Err(Error::Precondition(
            "a non-semiaffine set has no decomposition".into(),
        )),
        PeriodicForm::TwoCosets { h, a, b } => h.coset(a)?.union(&h.coset(b)?),
        PeriodicForm::CosetMinusSubgroup { h, p, g } => match p {
            None => h.coset(g),
            Some(p) => h.bits().difference(p.bits())?.shift(g),
        },
    }
}
