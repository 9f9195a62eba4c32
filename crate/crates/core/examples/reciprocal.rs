//! Reciprocal pairs of skew morphisms of Z_m and Z_n.
//!
//! cargo run --release --example reciprocal -- 9 6

use skewmorph::enumerate::Enumerator;
use skewmorph::skew::is_reciprocal_pair;
use skewmorph::AbelianGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (9, 6),
    };
    let enumerator = Enumerator::new();
    let left = enumerator.all(&AbelianGroup::cyclic(m)?);
    let right = enumerator.all(&AbelianGroup::cyclic(n)?);
    let mut count = 0;
    for phi in left.iter() {
        for psi in right.iter() {
            if is_reciprocal_pair(phi, psi)? {
                count += 1;
                println!(
                    "{:?} (order {}, smooth {})  <->  {:?} (order {}, smooth {})",
                    phi.table(),
                    phi.order(),
                    phi.is_smooth(),
                    psi.table(),
                    psi.order(),
                    psi.is_smooth()
                );
            }
        }
    }
    println!("Z{m}, Z{n}: {count} reciprocal pairs");
    Ok(())
}
