use std::collections::BTreeSet;

use skewmorph::abelian::abelian_groups_of_order;
use skewmorph::construct::{
    nonsmooth_witness, nse_construct, pns_witness_odd, pns_witness_two, root_construct, NseParams,
    RootParams,
};
use skewmorph::enumerate::{smooth_only_predicate, theorem2_necessary, Enumerator};
use skewmorph::numtheory::divisors;
use skewmorph::AbelianGroup;

#[test]
fn witness_exists_exactly_when_enumeration_finds_one() {
    let enumerator = Enumerator::new();
    for n in 1..=27 {
        for g in abelian_groups_of_order(n) {
            let found = enumerator.all(&g).iter().any(|m| !m.is_smooth());
            let witness = nonsmooth_witness(&g);
            assert_eq!(witness.is_some(), found, "{}", g.label());
            if let Some(w) = witness {
                assert!(!w.is_smooth());
                assert!(
                    enumerator.all(&g).iter().any(|m| m.table() == w.table()),
                    "{}",
                    g.label()
                );
            }
            if g.is_cyclic() {
                assert_eq!(smooth_only_predicate(n), !found, "Z{n}");
            } else if g.factors().len() > 1 {
                assert_eq!(theorem2_necessary(&g).unwrap(), !found, "{}", g.label());
            }
        }
    }
}

#[test]
fn root_family_lies_in_the_enumeration() {
    let enumerator = Enumerator::new();
    for n in 4..=40u64 {
        let all: BTreeSet<Vec<usize>> = enumerator
            .all(&AbelianGroup::cyclic(n).unwrap())
            .iter()
            .map(|m| m.table().to_vec())
            .collect();
        for k in divisors(n).into_iter().filter(|&k| k > 1 && k < n) {
            for s in 0..n {
                if let Ok(params) = RootParams::new(n, k, s) {
                    let phi = root_construct(&params).unwrap();
                    assert!(all.contains(phi.table()), "n={n} k={k} s={s}");
                }
            }
        }
    }
}

#[test]
fn pns_witnesses_for_prime_powers() {
    for (p, e) in [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4)] {
        let phi = pns_witness_odd(p, e).unwrap();
        assert_eq!(phi.order(), 2 * p);
        assert!(!phi.is_smooth());
        let m = phi.order();
        assert_eq!(phi.power_of(1), m - 1);
        assert_eq!(phi.power_of(phi.apply(1)), 3);
    }
    for e in 5..=8 {
        let phi = pns_witness_two(e).unwrap();
        assert_eq!(phi.order(), 8);
        assert!(!phi.is_smooth());
    }
    assert!(pns_witness_odd(3, 1).is_err());
    assert!(pns_witness_two(4).is_err());
}

#[test]
fn nse_family_for_p_5() {
    let params = NseParams::all(5).unwrap();
    assert_eq!(params.len(), 4 * 4 * 3);
    let mut seen = BTreeSet::new();
    for p in &params {
        let phi = nse_construct(p).unwrap();
        assert_eq!(phi.order(), 5 * p.k);
        assert!(!phi.is_smooth());
        assert_eq!(phi.kernel().members(), [0, 5, 10, 15, 20]);
        for x in 0..25 {
            let j = (x % 5) as u64;
            assert_eq!(phi.power_of(x), (1 + j * p.nu * p.k) % (5 * p.k));
        }
        assert!(seen.insert(phi.table().to_vec()), "{p:?} repeats");
    }
}
