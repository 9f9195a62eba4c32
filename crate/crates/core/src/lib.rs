//! Skew morphisms of finite abelian groups.
//!
//! A skew morphism of a group `A` is a permutation `φ` fixing the identity
//! such that `φ(a + b) = φ(a) + φ^π(a)(b)` for some power function `π`. This
//! crate validates them, derives their power functions, kernels, cores and
//! smoothness, builds the known parametric families, and enumerates every
//! skew morphism of small abelian groups.

pub mod abelian;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod numtheory;
pub mod skew;

pub use abelian::{AbelianGroup, Automorphism, GroupPermutation, Subgroup};
pub use error::{Error, Result};
pub use skew::{validate, SkewMorphism};
