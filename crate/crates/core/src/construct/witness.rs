use super::{direct_product, nse_construct, pns_witness_odd, pns_witness_two, NseParams};
use crate::abelian::AbelianGroup;
use crate::numtheory::factorize;
use crate::skew::SkewMorphism;

/// A cyclic `p`-primary component of a group: `generator` has order `p^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Component {
    p: u64,
    e: u32,
    generator: usize,
}

impl Component {
    fn order(&self) -> u64 {
        self.p.pow(self.e)
    }
}

/// Primary decomposition read off the factor list: for factor `f_i` with
/// `p^e ‖ f_i`, the element `f_i/p^e` at position `i`.
fn components(group: &AbelianGroup) -> Vec<Component> {
    let mut out = Vec::new();
    let rank = group.factors().len();
    for (i, &f) in group.factors().iter().enumerate() {
        for (p, e) in factorize(f) {
            let mut coords = vec![0; rank];
            coords[i] = f / p.pow(e);
            out.push(Component {
                p,
                e,
                generator: group.index_of(&coords),
            });
        }
    }
    out
}

/// A non-smooth skew morphism of `group` built as `α × id`, where `α` is a
/// witness on a `Z_{p^e}` (`p` odd, `e >= 2`), a `Z_{2^e}` (`e >= 5`) or a
/// `Z_p × Z_p` (`p` odd) component. `None` when no such component exists;
/// for cyclic groups that means every skew morphism is smooth.
pub fn nonsmooth_witness(group: &AbelianGroup) -> Option<SkewMorphism> {
    let comps = components(group);
    let (alpha, chosen): (SkewMorphism, Vec<usize>) =
        if let Some(i) = comps.iter().position(|c| c.p > 2 && c.e >= 2) {
            (pns_witness_odd(comps[i].p, comps[i].e).ok()?, vec![i])
        } else if let Some(i) = comps.iter().position(|c| c.p == 2 && c.e >= 5) {
            (pns_witness_two(comps[i].e).ok()?, vec![i])
        } else {
            let (i, j) = (0..comps.len()).find_map(|i| {
                (i + 1..comps.len())
                    .find(|&j| comps[i].p > 2 && comps[j].p == comps[i].p)
                    .map(|j| (i, j))
            })?;
            let p = comps[i].p;
            (
                nse_construct(&NseParams::new(p, 1, 1, p - 1).ok()?).ok()?,
                vec![i, j],
            )
        };
    let rest: Vec<usize> = (0..comps.len()).filter(|i| !chosen.contains(i)).collect();
    let rest_group =
        AbelianGroup::new(&rest.iter().map(|&i| comps[i].order()).collect::<Vec<_>>()).ok()?;
    let local = direct_product(&alpha, &SkewMorphism::identity(&rest_group)).ok()?;
    // local group has generators chosen ++ rest, in that order
    let images: Vec<usize> = chosen
        .iter()
        .chain(&rest)
        .map(|&i| comps[i].generator)
        .collect();
    let h = local.group();
    let embed = |x: usize| {
        h.coords(x)
            .iter()
            .zip(&images)
            .fold(0, |acc, (&c, &g)| group.add(acc, group.scale(g, c)))
    };
    let iota: Vec<usize> = h.elements().map(embed).collect();
    let mut iota_inv = vec![usize::MAX; group.order()];
    for (x, &y) in iota.iter().enumerate() {
        iota_inv[y] = x;
    }
    let table: Vec<usize> = group
        .elements()
        .map(|y| iota[local.apply(iota_inv[y])])
        .collect();
    let phi = SkewMorphism::from_table(group, table).ok()?;
    (!phi.is_smooth()).then_some(phi)
}
