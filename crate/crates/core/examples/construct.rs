//! Build skew morphisms from the three parametric families.
//!
//! cargo run --example construct

use skewmorph::construct::{
    csm_construct, enumerate_csm_params, nse_construct, root_construct, CsmParams, NseParams,
    RootParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // smooth family on Z_n
    let p = CsmParams::new(6, 2, 1, 1, 2)?;
    let phi = csm_construct(&p)?;
    println!(
        "smooth  {p:?}\n        -> {:?} order {}",
        phi.table(),
        phi.order()
    );
    println!(
        "        Z12 has {} parameter tuples",
        enumerate_csm_params(12).len()
    );
    if let Err(e) = CsmParams::new(6, 2, 0, 1, 1) {
        println!("        rejected: {e}");
    }

    // square roots of automorphisms on Z_n
    let p = RootParams::new(9, 3, 8)?;
    let phi = root_construct(&p)?;
    println!(
        "root    {p:?}\n        -> {:?} smooth {}",
        phi.table(),
        phi.is_smooth()
    );
    let square: Vec<usize> = phi.perm_power(2).table().to_vec();
    println!("        square {square:?}");

    // proper skew morphisms of Z_p x Z_p with kernel <a>
    for params in NseParams::all(3)? {
        let (beta, phi) = params.solve()?;
        println!(
            "nse     d={} nu={} r={} beta={beta} -> order {} power {:?}",
            params.d,
            params.nu,
            params.r,
            phi.order(),
            phi.power()
        );
        assert_eq!(nse_construct(&params)?.table(), phi.table());
    }
    Ok(())
}
