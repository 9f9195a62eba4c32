//! Validation and invariants of skew morphisms.

mod equivalence;
mod identities;
mod morphism;
mod product;
mod quotient;
mod reciprocal;
mod record;

pub use equivalence::{equivalence_classes, equivalence_classes_under};
pub use identities::{check_conjugation_closure, check_identities, IdentityFailure};
pub use morphism::{validate, SkewMorphism};
pub use product::{skew_product_group, SkewProductGroup};
pub use quotient::{quotient_skew, quotient_with_projection};
pub use reciprocal::is_reciprocal_pair;
pub use record::{check_record, RecordCheck, SkewRecord};
