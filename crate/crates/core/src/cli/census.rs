use serde::{Deserialize, Serialize};

use super::{parse_group, CensusArgs, Context, Failure};
use crate::abelian::AbelianGroup;
use crate::enumerate::{EnumerationReport, Enumerator};

/// One CSV row of a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub group: String,
    pub order: usize,
    pub total: usize,
    pub autos: usize,
    pub proper: usize,
    pub smooth: usize,
    pub nonsmooth: usize,
    pub ms: u128,
}

impl CensusRecord {
    pub fn from_report(report: &EnumerationReport) -> Self {
        let c = report.counts;
        CensusRecord {
            group: report.group.label(),
            order: report.group.order(),
            total: c.total,
            autos: c.automorphisms,
            proper: c.proper,
            smooth: c.smooth,
            nonsmooth: c.nonsmooth,
            ms: report.elapsed.as_millis(),
        }
    }

    /// `total = autos + proper = smooth + nonsmooth`.
    pub fn is_consistent(&self) -> bool {
        self.total == self.autos + self.proper && self.total == self.smooth + self.nonsmooth
    }
}

pub(super) fn run(ctx: &mut Context, args: CensusArgs) -> Result<(), Failure> {
    let groups: Vec<AbelianGroup> = match (args.cyclic_from, args.cyclic_to) {
        (Some(a), Some(b)) => {
            if a == 0 || a > b {
                return Err(Failure::Usage(format!("empty cyclic range {a}..={b}")));
            }
            (a..=b)
                .map(|n| AbelianGroup::cyclic(n).map_err(Failure::from))
                .collect::<Result<_, _>>()?
        }
        _ if !args.groups.is_empty() => args
            .groups
            .iter()
            .map(|g| parse_group(g))
            .collect::<Result<_, _>>()?,
        _ => {
            return Err(Failure::Usage(
                "census needs --cyclic-from/--cyclic-to or --groups".into(),
            ))
        }
    };
    let guard = ctx.guard();
    // fail before doing any work if some group is too large
    for g in &groups {
        guard.check(g)?;
    }
    let enumerator = Enumerator::new();
    let mut writer = csv::Writer::from_writer(&mut ctx.out);
    for g in &groups {
        let record = CensusRecord::from_report(&enumerator.report(g, guard)?);
        writer
            .serialize(&record)
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    writer.flush()?;
    drop(writer);
    ctx.note(&format!("census of {} groups", groups.len()))?;
    Ok(())
}
