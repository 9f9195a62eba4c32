//! Non-smooth witnesses for groups that fail the smooth-only condition.
//!
//! cargo run --example witness -- Z3xZ3 Z32xZ2 Z2xZ6

use skewmorph::construct::nonsmooth_witness;
use skewmorph::enumerate::theorem2_necessary;
use skewmorph::AbelianGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut literals: Vec<String> = std::env::args().skip(1).collect();
    if literals.is_empty() {
        literals = ["Z3xZ3", "Z3xZ6", "Z9xZ2", "Z32xZ2", "Z2xZ6", "Z5xZ15"]
            .map(String::from)
            .to_vec();
    }
    for literal in literals {
        let group = AbelianGroup::parse(&literal)?;
        let condition = match theorem2_necessary(&group) {
            Ok(holds) => format!("condition {}", if holds { "holds" } else { "fails" }),
            Err(_) => "cyclic".to_string(),
        };
        match nonsmooth_witness(&group) {
            Some(phi) => println!(
                "{:<8} {condition:<16} witness of order {}, skew-type {}, kernel size {}",
                group.label(),
                phi.order(),
                phi.skew_type(),
                phi.kernel().order()
            ),
            None => println!("{:<8} {condition:<16} no witness", group.label()),
        }
    }
    Ok(())
}
