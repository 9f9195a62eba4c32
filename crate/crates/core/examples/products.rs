//! Direct products, quotients and the skew product group.
//!
//! cargo run --example products

use skewmorph::construct::{direct_product, pns_witness_odd};
use skewmorph::enumerate::Enumerator;
use skewmorph::skew::{quotient_skew, skew_product_group};
use skewmorph::{AbelianGroup, SkewMorphism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = pns_witness_odd(3, 2)?;
    let z2 = AbelianGroup::cyclic(2)?;
    let prod = direct_product(&alpha, &SkewMorphism::identity(&z2))?;
    println!(
        "Z9 witness x id on Z2: group {}, order {}, smooth {}",
        prod.group().label(),
        prod.order(),
        prod.is_smooth()
    );
    println!(
        "witness x witness: {}",
        direct_product(&alpha, &alpha).unwrap_err()
    );

    // accepted products among all pairs from Z9 and Z6
    let e = Enumerator::new();
    let (z9, z6) = (AbelianGroup::cyclic(9)?, AbelianGroup::cyclic(6)?);
    let mut accepted = 0;
    let mut total = 0;
    for phi in e.all(&z9).iter() {
        for psi in e.all(&z6).iter() {
            total += 1;
            accepted += direct_product(phi, psi).is_ok() as usize;
        }
    }
    println!("Z9 x Z6: {accepted} of {total} pairs give a skew morphism");

    let kernel = alpha.kernel();
    let bar = quotient_skew(&alpha, &kernel)?;
    println!(
        "quotient of the Z9 witness by its kernel {:?}: {} with table {:?}",
        kernel.members(),
        bar.group().label(),
        bar.table()
    );

    let pg = skew_product_group(&alpha)?;
    println!(
        "skew product group: {} elements, core of translations {:?}, cyclic part core-free {}",
        pg.order(),
        pg.core_of_translations().members(),
        pg.is_corefree_cyclic_part()
    );
    Ok(())
}
