//! Validate a permutation as a skew morphism and print its invariants.
//!
//! cargo run --example validate

use skewmorph::skew::{check_identities, skew_product_group};
use skewmorph::{validate, AbelianGroup, GroupPermutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z9 = AbelianGroup::parse("Z9")?;
    // x -> -x - 3·x(x-1)/2 on Z9
    let table: Vec<usize> = (0..9i64)
        .map(|x| (-x - 3 * (x * (x - 1) / 2)).rem_euclid(9) as usize)
        .collect();
    let phi = validate(&z9, &GroupPermutation::new(table)?)?;

    println!("table      {:?}", phi.table());
    println!("cycles     {:?}", phi.cycles());
    println!("order      {}", phi.order());
    println!("power      {:?}", phi.power());
    println!("kernel     {:?}", phi.kernel().members());
    println!("core       {:?}", phi.core().members());
    println!("skew-type  {}", phi.skew_type());
    println!("smooth     {}", phi.is_smooth());
    println!("proper     {}", phi.is_proper());
    println!("|<L_A, phi>| = {}", skew_product_group(&phi)?.order());
    match check_identities(&phi) {
        Ok(()) => println!("all structural identities hold"),
        Err(f) => println!("identity {} fails: {}", f.name, f.detail),
    }

    // x -> 2x + 1 moves the identity; swapping 1 and 2 breaks the defining identity
    let moved = GroupPermutation::new((0..9).map(|x| (2 * x + 1) % 9).collect())?;
    println!("2x+1: {}", validate(&z9, &moved).unwrap_err());
    let swap = GroupPermutation::new(vec![0, 2, 1, 3, 4, 5, 6, 7, 8])?;
    println!("swap 1,2: {}", validate(&z9, &swap).unwrap_err());
    Ok(())
}
