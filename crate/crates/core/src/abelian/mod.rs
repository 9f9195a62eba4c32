//! Exact arithmetic in finite abelian groups.

pub(crate) mod automorphism;
mod group;
mod perm;
mod quotient;
mod subgroup;

pub use automorphism::{enumerate_automorphisms, generating_set, is_homomorphism, Automorphism};
pub use group::{abelian_groups_of_order, AbelianGroup, GroupElement};
pub use perm::{perm_order, perm_power, GroupPermutation};
pub use quotient::{invariant_factors, invariant_factors_from_orders, quotient_group};
pub use subgroup::{enumerate_subgroups, Subgroup, DEFAULT_GUARD};
