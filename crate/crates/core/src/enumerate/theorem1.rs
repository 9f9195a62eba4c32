use std::time::Duration;

use serde::Serialize;

use super::{smooth_only_predicate, Enumerator, Guard};
use crate::abelian::AbelianGroup;
use crate::error::Result;

/// One `n` of the cyclic smoothness check.
#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Row {
    pub n: u64,
    pub total: usize,
    pub nonsmooth: usize,
    pub predicted_smooth_only: bool,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Verdict {
    pub rows: Vec<Theorem1Row>,
    pub pass: bool,
}

impl Theorem1Verdict {
    /// The `n` at which a non-smooth skew morphism was found.
    pub fn nonsmooth_orders(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| r.nonsmooth > 0)
            .map(|r| r.n)
            .collect()
    }
}

/// For `1 <= n <= max_n`, enumerates `Z_n` and checks that a non-smooth
/// skew morphism exists exactly when [`smooth_only_predicate`] is false.
pub fn verify_theorem1(max_n: u64) -> Result<Theorem1Verdict> {
    verify_theorem1_with(max_n, Guard::default())
}

pub fn verify_theorem1_with(max_n: u64, guard: Guard) -> Result<Theorem1Verdict> {
    let top = AbelianGroup::cyclic(max_n.max(1))?;
    guard.check(&top)?;
    let enumerator = Enumerator::new();
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let group = AbelianGroup::cyclic(n)?;
        let report = enumerator.report(&group, guard)?;
        let predicted = smooth_only_predicate(n);
        rows.push(Theorem1Row {
            n,
            total: report.counts.total,
            nonsmooth: report.counts.nonsmooth,
            predicted_smooth_only: predicted,
            pass: (report.counts.nonsmooth == 0) == predicted,
            elapsed: report.elapsed,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(Theorem1Verdict { rows, pass })
}
