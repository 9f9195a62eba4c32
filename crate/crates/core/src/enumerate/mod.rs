//! Exhaustive enumeration of skew morphisms and the arithmetic predicates
//! that classify which groups admit non-smooth ones.

mod oracle;
mod predicates;
mod report;
mod search;
mod theorem1;

use std::time::Instant;

pub use oracle::{brute_force_oracle, DEFAULT_ORACLE_GUARD};
pub use predicates::{smooth_only_predicate, theorem2_necessary};
pub use report::{Counts, EnumerationReport};
pub use search::Enumerator;
pub use theorem1::{verify_theorem1, verify_theorem1_with, Theorem1Row, Theorem1Verdict};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};

pub const DEFAULT_CYCLIC_GUARD: usize = 64;
pub const DEFAULT_GENERAL_GUARD: usize = 32;

/// Maximum group order accepted by [`enumerate_skew_morphisms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub cyclic: usize,
    pub general: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            cyclic: DEFAULT_CYCLIC_GUARD,
            general: DEFAULT_GENERAL_GUARD,
        }
    }
}

impl Guard {
    /// The same limit for cyclic and non-cyclic groups.
    pub fn uniform(limit: usize) -> Self {
        Guard {
            cyclic: limit,
            general: limit,
        }
    }

    pub fn limit_for(&self, group: &AbelianGroup) -> usize {
        if group.is_cyclic() {
            self.cyclic
        } else {
            self.general
        }
    }

    pub fn check(&self, group: &AbelianGroup) -> Result<()> {
        let guard = self.limit_for(group);
        if group.order() > guard {
            return Err(Error::GuardExceeded {
                order: group.order(),
                guard,
            });
        }
        Ok(())
    }
}

/// Every skew morphism of `group`, under the default guard.
pub fn enumerate_skew_morphisms(group: &AbelianGroup) -> Result<EnumerationReport> {
    enumerate_with_guard(group, Guard::default())
}

pub fn enumerate_with_guard(group: &AbelianGroup, guard: Guard) -> Result<EnumerationReport> {
    Enumerator::new().report(group, guard)
}

impl Enumerator {
    /// Guarded enumeration that reuses this enumerator's cache.
    pub fn report(&self, group: &AbelianGroup, guard: Guard) -> Result<EnumerationReport> {
        guard.check(group)?;
        let start = Instant::now();
        let found = self.all(group);
        Ok(EnumerationReport::new(
            group,
            found.to_vec(),
            start.elapsed(),
        ))
    }
}
