use std::time::Instant;

use rayon::prelude::*;

use super::EnumerationReport;
use crate::abelian::{AbelianGroup, GroupPermutation};
use crate::error::{Error, Result};
use crate::skew::{validate, SkewMorphism};

pub const DEFAULT_ORACLE_GUARD: usize = 10;

/// Ground truth: validate every permutation fixing the identity.
pub fn brute_force_oracle(group: &AbelianGroup, guard: usize) -> Result<EnumerationReport> {
    let n = group.order();
    if n > guard {
        return Err(Error::GuardExceeded { order: n, guard });
    }
    let start = Instant::now();
    if n <= 2 {
        let id = SkewMorphism::identity(group);
        return Ok(EnumerationReport::new(group, vec![id], start.elapsed()));
    }
    // split the work on the image of element 1
    let found: Vec<SkewMorphism> = (1..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let rest: Vec<usize> = (1..n).filter(|&x| x != first).collect();
            let mut out = Vec::new();
            for_each_permutation(rest, |tail| {
                let mut table = Vec::with_capacity(n);
                table.push(0);
                table.push(first);
                table.extend_from_slice(tail);
                let perm = GroupPermutation::new(table).expect("permutation");
                if let Ok(phi) = validate(group, &perm) {
                    out.push(phi);
                }
            });
            out
        })
        .collect();
    Ok(EnumerationReport::new(group, found, start.elapsed()))
}

// Heap's algorithm
fn for_each_permutation<F: FnMut(&[usize])>(mut items: Vec<usize>, mut visit: F) {
    let k = items.len();
    let mut c = vec![0usize; k];
    visit(&items);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_visits_all() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(vec![1, 2, 3, 4], |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn small_cyclic_oracles() {
        let z5 = AbelianGroup::new(&[5]).unwrap();
        let r = brute_force_oracle(&z5, DEFAULT_ORACLE_GUARD).unwrap();
        assert_eq!(r.counts.total, 4);
        assert_eq!(r.counts.automorphisms, 4);
        let z4 = AbelianGroup::new(&[4]).unwrap();
        let r = brute_force_oracle(&z4, DEFAULT_ORACLE_GUARD).unwrap();
        assert_eq!((r.counts.total, r.counts.automorphisms), (2, 2));
        let big = AbelianGroup::new(&[11]).unwrap();
        assert!(brute_force_oracle(&big, DEFAULT_ORACLE_GUARD).is_err());
    }
}
