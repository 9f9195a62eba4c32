use super::SkewMorphism;
use crate::abelian::{quotient_group, AbelianGroup, Subgroup};
use crate::error::{Error, Result};

/// The map induced by `φ` on the cosets of `sub`, validated as a skew morphism
/// of the quotient group. Also checks `π̄(ā) ≡ π(a) (mod |φ̄|)` pointwise.
///
/// The trivial subgroup returns `φ` unchanged (the quotient would otherwise be
/// re-expressed in invariant-factor form).
pub fn quotient_skew(phi: &SkewMorphism, sub: &Subgroup) -> Result<SkewMorphism> {
    if sub.is_trivial() {
        return Ok(phi.clone());
    }
    let (quotient, projection) = quotient_group(phi.group(), sub)?;
    quotient_with_projection(phi, sub, &quotient, &projection)
}

/// Same as [`quotient_skew`] with a caller-supplied quotient and projection.
pub fn quotient_with_projection(
    phi: &SkewMorphism,
    sub: &Subgroup,
    quotient: &AbelianGroup,
    projection: &[usize],
) -> Result<SkewMorphism> {
    let g = phi.group();
    let mut table = vec![usize::MAX; quotient.order()];
    for a in g.elements() {
        let image = projection[phi.apply(a)];
        for &b in sub.members() {
            let ab = g.add(a, b);
            if projection[phi.apply(ab)] != image {
                return Err(Error::NotInvariant { a, b: ab });
            }
        }
        table[projection[a]] = image;
    }
    let bar = SkewMorphism::from_table(quotient, table)
        .map_err(|e| Error::QuotientNotSkew(e.to_string()))?;
    let mbar = bar.order();
    for a in g.elements() {
        if bar.power_of(projection[a]) != phi.power_of(a) % mbar {
            return Err(Error::Consistency(format!(
                "quotient power at {} is {} but π({a}) = {} mod {mbar}",
                projection[a],
                bar.power_of(projection[a]),
                phi.power_of(a)
            )));
        }
    }
    Ok(bar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pns9() -> SkewMorphism {
        let g = AbelianGroup::new(&[9]).unwrap();
        let t = (0..9i64)
            .map(|x| (-x - 3 * x * (x - 1) / 2).rem_euclid(9) as usize)
            .collect();
        SkewMorphism::from_table(&g, t).unwrap()
    }

    #[test]
    fn trivial_and_whole() {
        let phi = pns9();
        assert_eq!(quotient_skew(&phi, &Subgroup::trivial()).unwrap(), phi);
        let whole = Subgroup::whole(phi.group());
        let bar = quotient_skew(&phi, &whole).unwrap();
        assert!(bar.group().is_trivial());
        assert_eq!(bar.order(), 1);
    }

    #[test]
    fn pns_mod_kernel_is_negation() {
        let phi = pns9();
        let bar = quotient_skew(&phi, &phi.kernel()).unwrap();
        assert_eq!(bar.group().factors(), &[3]);
        assert_eq!(bar.table(), &[0, 2, 1]);
        assert!(bar.is_automorphism());
    }

    #[test]
    fn non_invariant_partition() {
        // CSM morphism of Z6: cosets of <3> = {0,3},{1,4},{2,5}; φ(1)=3, φ(4)=4
        let g = AbelianGroup::new(&[6]).unwrap();
        let phi = SkewMorphism::from_table(&g, vec![0, 3, 2, 5, 4, 1]).unwrap();
        let b = Subgroup::generated(&g, &[3]);
        assert!(matches!(
            quotient_skew(&phi, &b),
            Err(Error::NotInvariant { .. })
        ));
    }
}
