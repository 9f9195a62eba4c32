use std::io::Write;

use serde_json::json;

use super::{parse_group, Context, Failure, Suite};
use crate::abelian::{enumerate_automorphisms, generating_set};
use crate::construct::{csm_completeness, nonsmooth_witness};
use crate::enumerate::{theorem2_necessary, verify_theorem1_with, Enumerator};
use crate::skew::{check_conjugation_closure, check_identities, SkewRecord};

pub(super) fn run(ctx: &mut Context, suite: Suite) -> Result<(), Failure> {
    match suite {
        Suite::Theorem1 { max_n } => theorem1(ctx, max_n),
        Suite::Csm { n, max_n } => {
            let range = match (n, max_n) {
                (Some(n), _) => n..=n,
                (None, Some(max)) => 1..=max,
                (None, None) => 1..=40,
            };
            csm(ctx, range)
        }
        Suite::Identities { group } => identities(ctx, &group),
        Suite::Theorem2 { groups } => theorem2(ctx, &groups),
    }
}

fn theorem1(ctx: &mut Context, max_n: u64) -> Result<(), Failure> {
    let verdict = verify_theorem1_with(max_n, ctx.guard())?;
    if let Some(row) = verdict.rows.iter().find(|r| !r.pass) {
        writeln!(
            ctx.out,
            "{}",
            serde_json::to_string(row).expect("row serializes")
        )?;
        return Err(Failure::Math(format!(
            "Z{}: {} non-smooth skew morphisms, predicate says smooth-only = {}",
            row.n, row.nonsmooth, row.predicted_smooth_only
        )));
    }
    let orders = verdict.nonsmooth_orders();
    writeln!(
        ctx.out,
        "{}",
        json!({ "suite": "theorem1", "max_n": max_n, "pass": true, "nonsmooth_orders": orders })
    )?;
    Ok(())
}

fn csm(ctx: &mut Context, range: std::ops::RangeInclusive<u64>) -> Result<(), Failure> {
    let guard = ctx.guard();
    let enumerator = Enumerator::new();
    let (first, last) = (*range.start(), *range.end());
    for n in range {
        let cmp = csm_completeness(n, &enumerator, guard)?;
        if let Some((phi, missing_from)) = &cmp.counterexample {
            writeln!(ctx.out, "{}", SkewRecord::from_morphism(phi).to_json())?;
            return Err(Failure::Math(format!(
                "Z{n}: proper smooth skew morphism missing from the {missing_from}"
            )));
        }
        ctx.note(&format!(
            "Z{n}: {} proper smooth skew morphisms, all in the family",
            cmp.family
        ))?;
    }
    writeln!(
        ctx.out,
        "{}",
        json!({ "suite": "csm", "from": first, "to": last, "pass": true })
    )?;
    Ok(())
}

fn identities(ctx: &mut Context, literal: &str) -> Result<(), Failure> {
    let group = parse_group(literal)?;
    let guard = ctx.guard();
    let report = Enumerator::new().report(&group, guard)?;
    for phi in &report.morphisms {
        if let Err(f) = check_identities(phi) {
            writeln!(ctx.out, "{}", SkewRecord::from_morphism(phi).to_json())?;
            return Err(Failure::Math(format!(
                "identity `{}` fails: {}",
                f.name, f.detail
            )));
        }
    }
    let autos = enumerate_automorphisms(&group, guard.limit_for(&group))?;
    if let Err(f) = check_conjugation_closure(&report.morphisms, &generating_set(&autos)) {
        return Err(Failure::Math(format!(
            "identity `{}` fails: {}",
            f.name, f.detail
        )));
    }
    writeln!(
        ctx.out,
        "{}",
        json!({ "suite": "identities", "group": group.label(), "morphisms": report.morphisms.len(), "pass": true })
    )?;
    Ok(())
}

fn theorem2(ctx: &mut Context, literals: &[String]) -> Result<(), Failure> {
    let mut failure = None;
    for literal in literals {
        let group = parse_group(literal)?;
        let necessary = theorem2_necessary(&group)?;
        let witness = if necessary {
            None
        } else {
            nonsmooth_witness(&group)
        };
        let row = json!({
            "group": group.label(),
            "necessary": necessary,
            "witness": witness.as_ref().map(SkewRecord::from_morphism),
        });
        writeln!(ctx.out, "{row}")?;
        if !necessary && witness.is_none() && failure.is_none() {
            failure = Some(format!("{}: no non-smooth witness found", group.label()));
        }
    }
    failure.map_or(Ok(()), |m| Err(Failure::Math(m)))
}
