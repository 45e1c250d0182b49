//! Affine, semiaffine and midconvex subsets of finite Abelian groups.
//!
//! A subset `X` of an Abelian group is
//!
//! * *affine* if `x + y - z ∈ X` for all `x, y, z ∈ X`;
//! * *semiaffine* if `x + y - z ∈ X` or `x - y + z ∈ X` for all `x, y, z ∈ X`;
//! * *midconvex* in `H` if every `z ∈ H` with `2z = x + y` lies in `X` for
//!   all `x, y ∈ X`.
//!
//! The crate decides these predicates on bitset subsets of
//! `Z<n1> x ... x Z<nk>`, decomposes semiaffine sets into their canonical
//! forms ([`structure::classify`]), and sweeps whole groups to verify the
//! characterization exhaustively ([`search`]). See the `examples/`
//! directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod group;
pub mod search;
pub mod sphere;
pub mod structure;
pub mod subsets;
pub mod zline;

pub use error::{Error, Result};
pub use group::{Element, GroupSpec, DEFAULT_CAP};
pub use structure::{classify, Classification, Decomposition, Subgroup};
pub use subsets::{half_set, SubsetBits, Witness, WitnessKind};
