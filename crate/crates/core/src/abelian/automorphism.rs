use std::collections::HashSet;

use super::{AbelianGroup, GroupPermutation};
use crate::error::{Error, Result};

/// A permutation that is also a group homomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: GroupPermutation,
}

impl Automorphism {
    /// Checks the homomorphism law on all pairs.
    pub fn new(group: &AbelianGroup, perm: GroupPermutation) -> Result<Self> {
        if perm.len() != group.order() {
            return Err(Error::NotBijective {
                len: perm.len(),
                order: group.order(),
            });
        }
        if !is_homomorphism(group, perm.table()) {
            return Err(Error::Consistency(
                "permutation is not additive".to_string(),
            ));
        }
        Ok(Automorphism { perm })
    }

    pub fn identity(group: &AbelianGroup) -> Self {
        Automorphism {
            perm: GroupPermutation::identity(group.order()),
        }
    }

    pub fn perm(&self) -> &GroupPermutation {
        &self.perm
    }

    pub fn apply(&self, a: usize) -> usize {
        self.perm.apply(a)
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            perm: self.perm.inverse(),
        }
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: self.perm.compose(&other.perm),
        }
    }
}

pub fn is_homomorphism(group: &AbelianGroup, table: &[usize]) -> bool {
    group.elements().all(|a| {
        group
            .elements()
            .all(|b| table[group.add(a, b)] == group.add(table[a], table[b]))
    })
}

/// All injective homomorphisms from `Z_{f_1} x ... x Z_{f_k}` into a target
/// group, given by images of the unit vectors and validated incrementally.
///
/// The image of the i-th unit vector must have order dividing `f_i`. The
/// returned tables are indexed by the source's mixed-radix encoding. With
/// `first_only`, stops at one solution.
pub(crate) fn injective_homs<A, O>(
    source_factors: &[u64],
    target_order: usize,
    add: A,
    element_order: O,
    first_only: bool,
) -> Vec<Vec<usize>>
where
    A: Fn(usize, usize) -> usize,
    O: Fn(usize) -> u64,
{
    let candidates: Vec<Vec<usize>> = source_factors
        .iter()
        .map(|&f| {
            (0..target_order)
                .filter(|&y| f % element_order(y) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    extend(
        source_factors,
        &candidates,
        vec![0],
        target_order,
        &add,
        first_only,
        &mut out,
    );
    out
}

fn extend<A: Fn(usize, usize) -> usize>(
    factors: &[u64],
    candidates: &[Vec<usize>],
    partial: Vec<usize>,
    target_order: usize,
    add: &A,
    first_only: bool,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = out_depth(factors, partial.len());
    if depth == factors.len() {
        out.push(partial);
        return;
    }
    let f = factors[depth] as usize;
    let mut seen = vec![false; target_order];
    'cand: for &y in &candidates[depth] {
        seen.iter_mut().for_each(|s| *s = false);
        let mut next = Vec::with_capacity(partial.len() * f);
        for &base in &partial {
            let mut v = base;
            for _ in 0..f {
                if seen[v] {
                    continue 'cand;
                }
                seen[v] = true;
                next.push(v);
                v = add(v, y);
            }
        }
        extend(
            factors,
            candidates,
            next,
            target_order,
            add,
            first_only,
            out,
        );
        if first_only && !out.is_empty() {
            return;
        }
    }
}

fn out_depth(factors: &[u64], len: usize) -> usize {
    let mut prod = 1usize;
    for (i, &f) in factors.iter().enumerate() {
        if prod == len {
            return i;
        }
        prod *= f as usize;
    }
    factors.len()
}

/// All automorphisms, sorted by permutation table.
pub fn enumerate_automorphisms(group: &AbelianGroup, guard: usize) -> Result<Vec<Automorphism>> {
    if group.order() > guard {
        return Err(Error::GuardExceeded {
            order: group.order(),
            guard,
        });
    }
    let tables = injective_homs(
        group.factors(),
        group.order(),
        |a, b| group.add(a, b),
        |a| group.element_order(a),
        false,
    );
    let mut out: Vec<Automorphism> = tables
        .into_iter()
        .map(|t| Automorphism {
            perm: GroupPermutation::from_table_unchecked(t),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A small generating set of the group formed by `autos`, chosen greedily
/// in input order: each member not yet generated is added.
pub fn generating_set(autos: &[Automorphism]) -> Vec<Automorphism> {
    let mut gens: Vec<Automorphism> = Vec::new();
    let mut generated: HashSet<Automorphism> = HashSet::new();
    for a in autos {
        if generated.contains(a) || a.perm.is_identity() {
            continue;
        }
        gens.push(a.clone());
        let start = Automorphism {
            perm: GroupPermutation::identity(a.perm.len()),
        };
        generated.clear();
        generated.insert(start.clone());
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.compose(g);
                if generated.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::DEFAULT_GUARD;
    use crate::numtheory::euler_phi;

    #[test]
    fn generating_sets_generate() {
        for factors in [vec![2, 2, 2], vec![12], vec![3, 3], vec![2, 4]] {
            let g = AbelianGroup::new(&factors).unwrap();
            let autos = enumerate_automorphisms(&g, DEFAULT_GUARD).unwrap();
            let gens = generating_set(&autos);
            let mut seen: HashSet<Automorphism> = HashSet::from([Automorphism::identity(&g)]);
            let mut frontier = vec![Automorphism::identity(&g)];
            while let Some(x) = frontier.pop() {
                for y in gens.iter().map(|s| x.compose(s)) {
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len(), autos.len(), "{factors:?}");
            assert!(gens.len() <= 6, "{factors:?}: {}", gens.len());
        }
    }

    #[test]
    fn cyclic_counts_match_phi() {
        for n in 2..=40u64 {
            let g = AbelianGroup::new(&[n]).unwrap();
            let autos = enumerate_automorphisms(&g, DEFAULT_GUARD).unwrap();
            assert_eq!(autos.len() as u64, euler_phi(n), "n={n}");
        }
        let z2 = AbelianGroup::new(&[2]).unwrap();
        assert_eq!(
            enumerate_automorphisms(&z2, DEFAULT_GUARD).unwrap().len(),
            1
        );
        let t = AbelianGroup::trivial();
        assert_eq!(enumerate_automorphisms(&t, DEFAULT_GUARD).unwrap().len(), 1);
    }

    /// Brute force over all pairs of generator images, checking additivity.
    #[test]
    fn z3xz3_has_48() {
        let g = AbelianGroup::new(&[3, 3]).unwrap();
        let mut count = 0;
        for y1 in g.elements() {
            for y2 in g.elements() {
                let t: Vec<usize> = g
                    .elements()
                    .map(|a| {
                        let c = g.coords(a);
                        g.add(g.scale(y1, c[0]), g.scale(y2, c[1]))
                    })
                    .collect();
                if GroupPermutation::new(t.clone()).is_ok() && is_homomorphism(&g, &t) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 48);
        assert_eq!(
            enumerate_automorphisms(&g, DEFAULT_GUARD).unwrap().len(),
            48
        );
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        let autos = enumerate_automorphisms(&g, DEFAULT_GUARD).unwrap();
        let set: HashSet<_> = autos.iter().cloned().collect();
        for a in &autos {
            assert!(set.contains(&a.inverse()));
            for b in &autos {
                assert!(set.contains(&a.compose(b)));
            }
        }
        assert_eq!(autos.len(), 8);
    }
}
