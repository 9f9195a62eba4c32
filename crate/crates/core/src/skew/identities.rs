use std::collections::HashMap;

use super::{skew_product_group, SkewMorphism};
use crate::abelian::{Automorphism, Subgroup};

/// A structural identity that failed, with the smallest witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub name: &'static str,
    pub detail: String,
}

fn fail(name: &'static str, detail: String) -> Result<(), IdentityFailure> {
    Err(IdentityFailure { name, detail })
}

/// Re-derives every structural identity of one skew morphism from its
/// table: the defining identity, the kernel being a φ-invariant subgroup
/// equal to the core, power values being constant exactly on kernel cosets,
/// the sum identity, smoothness as constancy on cycles, and the skew product
/// group's order and core of translations.
pub fn check_identities(phi: &SkewMorphism) -> Result<(), IdentityFailure> {
    let g = phi.group();
    let m = phi.order();
    let one = 1 % m;
    for a in g.elements() {
        for b in g.elements() {
            let lhs = phi.apply(g.add(a, b));
            let rhs = g.add(phi.apply(a), phi.iterate(b, phi.power_of(a)));
            if lhs != rhs {
                return fail("defining identity", format!("a={a}, b={b}"));
            }
        }
    }
    if phi.power_of(0) != one {
        return fail("power at identity", format!("π(0)={}", phi.power_of(0)));
    }
    let members: Vec<usize> = g.elements().filter(|&a| phi.power_of(a) == one).collect();
    let kernel = match Subgroup::from_members(g, &members) {
        Ok(k) => k,
        Err(_) => return fail("kernel is a subgroup", format!("{members:?}")),
    };
    if let Some(&x) = members.iter().find(|&&x| !kernel.contains(phi.apply(x))) {
        return fail("kernel is invariant", format!("φ({x}) leaves the kernel"));
    }
    if phi.core().members() != kernel.members() {
        return fail(
            "core equals kernel",
            format!("core {:?}", phi.core().members()),
        );
    }
    if g.order() > 1 && kernel.order() == 1 {
        return fail("kernel is nontrivial", String::new());
    }
    for a in g.elements() {
        for b in g.elements() {
            let same = phi.power_of(a) == phi.power_of(b);
            if same != kernel.contains(g.sub(a, b)) {
                return fail("power classes are kernel cosets", format!("a={a}, b={b}"));
            }
            let sum = phi.power_sum(b, phi.power_of(a));
            if phi.power_of(g.add(a, b)) != sum {
                return fail("sum identity", format!("a={a}, b={b}"));
            }
        }
    }
    let constant_on_cycles = phi
        .cycles()
        .iter()
        .all(|c| c.iter().all(|&x| phi.power_of(x) == phi.power_of(c[0])));
    if constant_on_cycles != phi.is_smooth() {
        return fail("smooth iff constant on cycles", String::new());
    }
    let product = match skew_product_group(phi) {
        Ok(p) => p,
        Err(e) => return fail("skew product group", e.to_string()),
    };
    if product.order() != g.order() * m as usize {
        return fail("skew product order", format!("{}", product.order()));
    }
    if product.core_of_translations().members() != kernel.members() {
        return fail(
            "core of translations",
            format!("{:?}", product.core_of_translations().members()),
        );
    }
    Ok(())
}

/// The set is closed under conjugation by `autos`, and conjugation keeps
/// order, smoothness, skew-type and kernel size. For a finite set, closure
/// under a generating set of the automorphism group implies closure under
/// the whole group, so `autos` may be just generators.
pub fn check_conjugation_closure(
    morphisms: &[SkewMorphism],
    autos: &[Automorphism],
) -> Result<(), IdentityFailure> {
    let index: HashMap<&[usize], &SkewMorphism> =
        morphisms.iter().map(|m| (m.table(), m)).collect();
    for phi in morphisms {
        let n = phi.group().order();
        for theta in autos {
            let inv = theta.inverse();
            let table: Vec<usize> = (0..n)
                .map(|x| theta.apply(phi.apply(inv.apply(x))))
                .collect();
            // members are already validated, so a hit needs no revalidation
            let Some(conj) = index.get(table.as_slice()) else {
                return fail("closed under conjugation", format!("{table:?}"));
            };
            let same = conj.order() == phi.order()
                && conj.is_smooth() == phi.is_smooth()
                && conj.skew_type() == phi.skew_type()
                && conj.kernel().order() == phi.kernel().order()
                && (0..n).all(|a| conj.power_of(theta.apply(a)) == phi.power_of(a));
            if !same {
                return fail("conjugation invariants", format!("{:?}", phi.table()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{enumerate_automorphisms, AbelianGroup, DEFAULT_GUARD};
    use crate::enumerate::enumerate_skew_morphisms;

    #[test]
    fn z9_and_z3xz3() {
        for f in [vec![9], vec![3, 3]] {
            let g = AbelianGroup::new(&f).unwrap();
            let all = enumerate_skew_morphisms(&g).unwrap().morphisms;
            for phi in &all {
                check_identities(phi).unwrap();
            }
            let autos = enumerate_automorphisms(&g, DEFAULT_GUARD).unwrap();
            check_conjugation_closure(&all, &autos).unwrap();
        }
    }
}
