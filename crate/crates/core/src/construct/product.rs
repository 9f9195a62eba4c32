use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::skew::SkewMorphism;

/// The group `A × B` with factor list `A ++ B`; `(a, b)` has index
/// `a·|B| + b`.
pub fn product_group(a: &AbelianGroup, b: &AbelianGroup) -> Result<AbelianGroup> {
    let factors: Vec<u64> = a.factors().iter().chain(b.factors()).copied().collect();
    AbelianGroup::new(&factors)
}

/// `φ × ψ` on `A × B`, accepted iff every power value of both factors is
/// `1 mod gcd(|φ|, |ψ|)`.
pub fn direct_product(phi: &SkewMorphism, psi: &SkewMorphism) -> Result<SkewMorphism> {
    let d = gcd(phi.order(), psi.order());
    for (side, f) in [("left", phi), ("right", psi)] {
        if let Some(e) = f.group().elements().find(|&e| f.power_of(e) % d != 1 % d) {
            return Err(Error::ProductRejected {
                side,
                element: e,
                value: f.power_of(e),
                modulus: d,
            });
        }
    }
    let (ga, gb) = (phi.group(), psi.group());
    let group = product_group(ga, gb)?;
    let nb = gb.order();
    let table: Vec<usize> = group
        .elements()
        .map(|x| phi.apply(x / nb) * nb + psi.apply(x % nb))
        .collect();
    SkewMorphism::from_table(&group, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::pns_witness_odd;

    #[test]
    fn pns_times_identity() {
        let alpha = pns_witness_odd(3, 2).unwrap();
        let id = SkewMorphism::identity(&AbelianGroup::new(&[2]).unwrap());
        let phi = direct_product(&alpha, &id).unwrap();
        assert_eq!(phi.group().factors(), &[9, 2]);
        assert!(!phi.is_smooth());
        assert_eq!(phi.order(), 6);
    }

    #[test]
    fn pns_squared_rejected() {
        let alpha = pns_witness_odd(3, 2).unwrap();
        match direct_product(&alpha, &alpha) {
            Err(Error::ProductRejected { modulus, value, .. }) => {
                assert_eq!(modulus, 6);
                assert_ne!(value % 6, 1);
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }
}
