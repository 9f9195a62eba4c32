use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::AbelianGroup;
use crate::error::{Error, Result};

/// Default order guard for subgroup and automorphism enumeration.
pub const DEFAULT_GUARD: usize = 256;

/// A subgroup given by its sorted member list and an irredundant generating
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup {
            members: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &AbelianGroup) -> Self {
        Self::generated(group, &group.unit_generators())
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &AbelianGroup, gens: &[usize]) -> Self {
        let mut members = vec![0usize];
        let mut inside = vec![false; group.order()];
        inside[0] = true;
        let mut kept = Vec::new();
        for &g in gens {
            if inside[g] {
                continue;
            }
            kept.push(g);
            // close members + <g>
            let mut frontier = members.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &x in &frontier {
                    let y = group.add(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                        next.push(y);
                    }
                }
                frontier = next;
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            generators: kept,
        }
    }

    /// Accepts an arbitrary element set and checks that it is a subgroup.
    pub fn from_members(group: &AbelianGroup, members: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&0) {
            return Err(Error::NotASubgroup);
        }
        for &a in &set {
            group.check(a)?;
            for &b in &set {
                if !set.contains(&group.add(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let list: Vec<usize> = set.into_iter().collect();
        let s = Self::generated(group, &list);
        debug_assert_eq!(s.members, list);
        Ok(s)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// Every subgroup exactly once, sorted by (size, member list).
pub fn enumerate_subgroups(group: &AbelianGroup, guard: usize) -> Result<Vec<Subgroup>> {
    if group.order() > guard {
        return Err(Error::GuardExceeded {
            order: group.order(),
            guard,
        });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Subgroup::trivial()];
    found.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        for x in group.elements() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.generators.clone();
            gens.push(x);
            let bigger = Subgroup::generated(group, &gens);
            if found.insert(bigger.members.clone()) {
                frontier.push(bigger);
            }
        }
        out.push(h);
    }
    for s in &mut out {
        *s = minimize_generators(group, s);
    }
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(out)
}

fn minimize_generators(group: &AbelianGroup, s: &Subgroup) -> Subgroup {
    let mut gens = s.generators.clone();
    let mut i = 0;
    while i < gens.len() {
        let mut without = gens.clone();
        without.remove(i);
        if Subgroup::generated(group, &without).order() == s.order() {
            gens = without;
        } else {
            i += 1;
        }
    }
    Subgroup {
        members: s.members.clone(),
        generators: gens,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_subgroups_one_per_divisor() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        let subs = enumerate_subgroups(&z6, DEFAULT_GUARD).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let trivial = enumerate_subgroups(&AbelianGroup::trivial(), DEFAULT_GUARD).unwrap();
        assert_eq!(trivial.len(), 1);
    }

    /// Independent oracle: close every subset generated by at most two elements.
    fn two_generated_oracle(group: &AbelianGroup) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for a in group.elements() {
            for b in group.elements() {
                let mut set = BTreeSet::from([0usize]);
                loop {
                    let snapshot: Vec<usize> = set.iter().copied().collect();
                    let before = set.len();
                    for &x in &snapshot {
                        set.insert(group.add(x, a));
                        set.insert(group.add(x, b));
                    }
                    if set.len() == before {
                        break;
                    }
                }
                out.insert(set.into_iter().collect());
            }
        }
        out
    }

    #[test]
    fn z3xz3_has_six_subgroups() {
        let g = AbelianGroup::new(&[3, 3]).unwrap();
        let subs = enumerate_subgroups(&g, DEFAULT_GUARD).unwrap();
        let oracle = two_generated_oracle(&g);
        assert_eq!(oracle.len(), 6);
        let got: BTreeSet<Vec<usize>> = subs.iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(got, oracle);
    }

    #[test]
    fn lagrange_and_closure() {
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        for s in enumerate_subgroups(&g, DEFAULT_GUARD).unwrap() {
            assert_eq!(g.order() % s.order(), 0);
            assert!(Subgroup::from_members(&g, s.members()).is_ok());
            assert_eq!(
                Subgroup::generated(&g, s.generators()).members(),
                s.members()
            );
        }
    }

    #[test]
    fn guard_and_bad_sets() {
        let big = AbelianGroup::new(&[300]).unwrap();
        assert!(matches!(
            enumerate_subgroups(&big, DEFAULT_GUARD),
            Err(Error::GuardExceeded { .. })
        ));
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(
            Subgroup::from_members(&z6, &[0, 1]),
            Err(Error::NotASubgroup)
        );
        assert_eq!(Subgroup::from_members(&z6, &[3]), Err(Error::NotASubgroup));
    }
}
