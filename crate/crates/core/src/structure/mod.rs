//! Subgroups and the constructive classification of semiaffine sets.
//!
//! A subset `X` of an Abelian group `G` is semiaffine iff either
//!
//! 1. `X = (H + a) ∪ (H + b)` for a subgroup `H` and `a, b ∈ X`, or
//! 2. `X = (H ∖ C) + g` for a subgroup `H`, some `g ∈ G` and a set `C`
//!    midconvex in `H`.
//!
//! [`classify`] produces one of these forms (or a violation witness) and
//! [`TheoremVerifier`] cross-checks the result against the predicates in
//! [`crate::subsets`].

mod classify;
mod periodic;
mod record;
mod subgroup;
mod verify;

pub use classify::{
    affine_decompose, classify, every_translate_is_subgroup, midconvex_complement_extract,
    reconstruct, reconstruct_decomposition, two_coset_extract, Classification, Decomposition,
    LemmaOneTrace, TwoCosetExtraction,
};
pub use periodic::{
    periodic_midconvex_check, periodic_semiaffine_classify, reconstruct_periodic, PeriodicForm,
};
pub use record::{ClassificationRecord, Variant, WitnessRecord};
pub use subgroup::{all_subgroups, is_subgroup, quotient_has_even_order_element, Subgroup};
pub use verify::{
    find_decomposition, verify_theorem, CheckOutcome, TheoremReport, TheoremVerifier,
    VerifyOptions, DEFAULT_CONVERSE_LIMIT,
};
