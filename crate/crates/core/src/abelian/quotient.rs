use super::automorphism::injective_homs;
use super::{AbelianGroup, Subgroup};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, lcm};

/// Invariant factors (ascending divisibility chain) of an abelian group known
/// only through its element orders.
pub fn invariant_factors_from_orders(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for (p, _) in factorize(n) {
        // c[j] = log_p #{x : p^j x = 0}
        let mut logs = vec![0u32];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u64;
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            logs.push(l);
            if count == p.pow(crate::numtheory::valuation(n, p)) {
                break;
            }
        }
        // at_least[j] = number of cyclic p-factors of order >= p^j
        let at_least: Vec<u32> = (1..logs.len()).map(|j| logs[j] - logs[j - 1]).collect();
        let mut powers = Vec::new();
        for j in 0..at_least.len() {
            let exact = at_least[j] - at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..exact {
                powers.push(p.pow(j as u32 + 1));
            }
        }
        powers.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(powers);
    }
    let rank = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..rank)
        .map(|i| {
            per_prime
                .iter()
                .map(|v| v.get(i).copied().unwrap_or(1))
                .product()
        })
        .collect();
    out.sort_unstable();
    out
}

/// Invariant-factor form of `group` itself.
pub fn invariant_factors(group: &AbelianGroup) -> Vec<u64> {
    let orders: Vec<u64> = group.elements().map(|a| group.element_order(a)).collect();
    invariant_factors_from_orders(&orders)
}

/// `G/B` in invariant-factor form together with the projection
/// `element index -> quotient element index`, which is a homomorphism.
pub fn quotient_group(group: &AbelianGroup, sub: &Subgroup) -> Result<(AbelianGroup, Vec<usize>)> {
    let checked = Subgroup::from_members(group, sub.members())?;
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in group.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        for &b in checked.members() {
            coset_of[group.add(a, b)] = id;
        }
    }
    let k = reps.len();
    let coset_add = |x: usize, y: usize| coset_of[group.add(reps[x], reps[y])];
    let coset_order = |x: usize| {
        let mut o = 1u64;
        let mut v = x;
        while v != 0 {
            v = coset_add(v, x);
            o += 1;
        }
        o
    };
    let orders: Vec<u64> = (0..k).map(coset_order).collect();
    let factors = invariant_factors_from_orders(&orders);
    let quotient = AbelianGroup::new(&factors)?;
    let iso = injective_homs(&factors, k, coset_add, |x| orders[x], true)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Consistency("no isomorphism onto coset group".into()))?;
    let mut to_quotient = vec![0; k];
    for (q, &c) in iso.iter().enumerate() {
        to_quotient[c] = q;
    }
    debug_assert_eq!(
        factors.iter().fold(1, |a, &f| lcm(a, f)),
        orders.iter().fold(1, |a, &o| lcm(a, o))
    );
    let projection = coset_of.iter().map(|&c| to_quotient[c]).collect();
    Ok((quotient, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{enumerate_subgroups, DEFAULT_GUARD};

    #[test]
    fn examples() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        let b = Subgroup::generated(&z6, &[3]);
        let (q, _) = quotient_group(&z6, &b).unwrap();
        assert_eq!(q.factors(), &[3]);

        let (q, p) = quotient_group(&z6, &Subgroup::whole(&z6)).unwrap();
        assert!(q.is_trivial());
        assert!(p.iter().all(|&x| x == 0));

        let g = AbelianGroup::new(&[2, 4]).unwrap();
        let b = Subgroup::generated(&g, &[g.index_of(&[0, 2])]);
        let (q, _) = quotient_group(&g, &b).unwrap();
        assert_eq!(q.factors(), &[2, 2]);
    }

    #[test]
    fn invariant_forms() {
        let g = AbelianGroup::new(&[6, 4]).unwrap();
        assert_eq!(invariant_factors(&g), vec![2, 12]);
        let g = AbelianGroup::new(&[9, 2]).unwrap();
        assert_eq!(invariant_factors(&g), vec![18]);
        assert_eq!(
            invariant_factors(&AbelianGroup::trivial()),
            Vec::<u64>::new()
        );
    }

    #[test]
    fn projection_is_surjective_hom_with_kernel_b() {
        for factors in [vec![12], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![2, 6]] {
            let g = AbelianGroup::new(&factors).unwrap();
            for b in enumerate_subgroups(&g, DEFAULT_GUARD).unwrap() {
                let (q, p) = quotient_group(&g, &b).unwrap();
                assert_eq!(q.order() * b.order(), g.order());
                let mut hit = vec![false; q.order()];
                for x in g.elements() {
                    hit[p[x]] = true;
                    assert_eq!(p[x] == 0, b.contains(x));
                    for y in g.elements() {
                        assert_eq!(p[g.add(x, y)], q.add(p[x], p[y]));
                    }
                }
                assert!(hit.iter().all(|&h| h));
            }
        }
    }
}
