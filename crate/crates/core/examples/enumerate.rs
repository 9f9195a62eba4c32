//! Enumerate every skew morphism of a group and summarise them.
//!
//! cargo run --release --example enumerate -- Z18

use std::collections::BTreeMap;

use skewmorph::enumerate::Enumerator;
use skewmorph::skew::equivalence_classes;
use skewmorph::AbelianGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let literal = std::env::args().nth(1).unwrap_or_else(|| "Z18".into());
    let group = AbelianGroup::parse(&literal)?;
    let report = Enumerator::new().report(&group, Default::default())?;
    let c = report.counts;
    println!(
        "{}: {} skew morphisms, {} automorphisms, {} proper, {} smooth, {} non-smooth ({} ms)",
        group.label(),
        c.total,
        c.automorphisms,
        c.proper,
        c.smooth,
        c.nonsmooth,
        report.elapsed.as_millis()
    );

    let mut by_shape: BTreeMap<(u64, u64, bool), usize> = BTreeMap::new();
    for phi in &report.morphisms {
        *by_shape
            .entry((phi.order(), phi.skew_type(), phi.is_smooth()))
            .or_default() += 1;
    }
    println!("order  type  smooth  count");
    for ((order, ty, smooth), count) in by_shape {
        println!("{order:>5}  {ty:>4}  {smooth:>6}  {count:>5}");
    }

    let classes = equivalence_classes(&report.morphisms)?;
    println!(
        "{} classes up to conjugation by automorphisms",
        classes.len()
    );
    for phi in report.nonsmooth().take(3) {
        println!("non-smooth: {:?} power {:?}", phi.table(), phi.power());
    }
    Ok(())
}
