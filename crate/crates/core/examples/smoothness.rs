//! Where do non-smooth skew morphisms of Z_n exist? Compares exhaustive
//! enumeration with the arithmetic predicate for every n up to a bound.
//!
//! cargo run --release --example smoothness -- 40

use skewmorph::enumerate::verify_theorem1;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(40);
    let verdict = verify_theorem1(max_n)?;
    println!("   n  total  non-smooth  predicted smooth-only  ok");
    for row in &verdict.rows {
        println!(
            "{:>4}  {:>5}  {:>10}  {:>21}  {}",
            row.n,
            row.total,
            row.nonsmooth,
            row.predicted_smooth_only,
            if row.pass { "yes" } else { "NO" }
        );
    }
    println!("non-smooth orders: {:?}", verdict.nonsmooth_orders());
    println!("{}", if verdict.pass { "PASS" } else { "FAIL" });
    Ok(())
}
