use std::fmt;

use crate::abelian::{AbelianGroup, Automorphism, GroupPermutation, Subgroup};
use crate::error::{Error, Result};
use crate::numtheory::crt_pair;

/// A validated skew morphism together with its order and power function.
///
/// `power[a]` is the canonical residue of `π(a)` in `[0, order)`. When the
/// order is 1 every residue is 0, and all congruences modulo 1 hold.
#[derive(Clone)]
pub struct SkewMorphism {
    group: AbelianGroup,
    perm: GroupPermutation,
    order: u64,
    power: Vec<u64>,
    cycles: Cycles,
}

/// Cycle decomposition with, for every point, its cycle and position.
#[derive(Clone, Debug)]
struct Cycles {
    lists: Vec<Vec<usize>>,
    cycle_of: Vec<usize>,
    pos: Vec<usize>,
}

impl Cycles {
    fn new(perm: &GroupPermutation) -> Self {
        let lists = perm.cycles();
        let n = perm.len();
        let mut cycle_of = vec![0; n];
        let mut pos = vec![0; n];
        for (c, list) in lists.iter().enumerate() {
            for (i, &x) in list.iter().enumerate() {
                cycle_of[x] = c;
                pos[x] = i;
            }
        }
        Cycles {
            lists,
            cycle_of,
            pos,
        }
    }

    #[inline]
    fn iterate(&self, x: usize, k: u64) -> usize {
        let list = &self.lists[self.cycle_of[x]];
        list[((self.pos[x] as u64 + k) % list.len() as u64) as usize]
    }
}

/// Check the defining identity and derive the power function.
///
/// For each `a` the displacement `b -> φ(a+b) - φ(a)` must be a power of `φ`.
/// On every cycle of `φ` that pins the exponent to one residue modulo the
/// cycle length; the residues are combined by CRT into a residue modulo the
/// order. Rejections name the first failing `a` and a witness `b`.
pub fn validate(group: &AbelianGroup, perm: &GroupPermutation) -> Result<SkewMorphism> {
    let n = group.order();
    if perm.len() != n {
        return Err(Error::NotBijective {
            len: perm.len(),
            order: n,
        });
    }
    if perm.apply(0) != 0 {
        return Err(Error::IdentityMoved {
            image: perm.apply(0),
        });
    }
    let cycles = Cycles::new(perm);
    let order = perm.order();
    let t = perm.table();
    let mut power = vec![0u64; n];
    let mut stamp = vec![usize::MAX; cycles.lists.len()];
    let mut offset = vec![0u64; cycles.lists.len()];
    for a in 0..n {
        let fa = t[a];
        let (mut r, mut m) = (0u64, 1u64);
        for b in 0..n {
            let d = group.sub(t[group.add(a, b)], fa);
            let c = cycles.cycle_of[b];
            if cycles.cycle_of[d] != c {
                return Err(Error::NoPower { a, b });
            }
            let len = cycles.lists[c].len();
            let off = ((cycles.pos[d] + len - cycles.pos[b]) % len) as u64;
            if stamp[c] == a {
                if offset[c] != off {
                    return Err(Error::NoPower { a, b });
                }
                continue;
            }
            stamp[c] = a;
            offset[c] = off;
            match crt_pair(r, m, off, len as u64) {
                Some((r2, m2)) => {
                    r = r2;
                    m = m2;
                }
                None => return Err(Error::NoPower { a, b }),
            }
        }
        debug_assert_eq!(m, order);
        power[a] = r % order;
    }
    Ok(SkewMorphism {
        group: group.clone(),
        perm: perm.clone(),
        order,
        power,
        cycles,
    })
}

impl SkewMorphism {
    /// Validate a raw image table.
    pub fn from_table(group: &AbelianGroup, table: Vec<usize>) -> Result<Self> {
        let perm = GroupPermutation::new(table).map_err(|_| Error::NotBijective {
            len: group.order(),
            order: group.order(),
        })?;
        validate(group, &perm)
    }

    pub fn identity(group: &AbelianGroup) -> Self {
        validate(group, &GroupPermutation::identity(group.order()))
            .expect("identity is a skew morphism")
    }

    pub fn from_automorphism(group: &AbelianGroup, auto: &Automorphism) -> Self {
        validate(group, auto.perm()).expect("automorphisms are skew morphisms")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn perm(&self) -> &GroupPermutation {
        &self.perm
    }

    pub fn table(&self) -> &[usize] {
        self.perm.table()
    }

    /// `|φ|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn power(&self) -> &[u64] {
        &self.power
    }

    pub fn power_of(&self, a: usize) -> u64 {
        self.power[a]
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.perm.apply(a)
    }

    /// `φ^k(x)` for `k >= 0`.
    #[inline]
    pub fn iterate(&self, x: usize, k: u64) -> usize {
        self.cycles.iterate(x, k)
    }

    /// `φ^k(x)` for any integer `k`.
    pub fn iterate_signed(&self, x: usize, k: i64) -> usize {
        let m = self.order as i64;
        self.iterate(x, k.rem_euclid(m) as u64)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles.lists
    }

    /// `σ(b, i) = π(b) + π(φ(b)) + ... + π(φ^(i-1)(b))` reduced mod `|φ|`,
    /// the exponent in `φ^i(b + c) = φ^i(b) + φ^σ(b,i)(c)`.
    pub fn power_sum(&self, b: usize, i: u64) -> u64 {
        let m = self.order;
        (0..i).fold(0, |acc, k| (acc + self.power[self.iterate(b, k)]) % m)
    }

    /// π ≡ 1 everywhere.
    pub fn is_automorphism(&self) -> bool {
        let one = 1 % self.order;
        self.power.iter().all(|&p| p == one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_automorphism()
    }

    /// `π(φ(a)) ≡ π(a)` for all `a`.
    pub fn is_smooth(&self) -> bool {
        (0..self.group.order()).all(|a| self.power[self.apply(a)] == self.power[a])
    }

    /// `{a : π(a) ≡ 1}`.
    pub fn kernel(&self) -> Subgroup {
        let one = 1 % self.order;
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&a| self.power[a] == one)
            .collect();
        Subgroup::from_members(&self.group, &members)
            .expect("kernel of a validated skew morphism is a subgroup")
    }

    /// Intersection of `φ^i(Ker φ)` over `i = 1..|φ|`.
    pub fn core(&self) -> Subgroup {
        let ker = self.kernel();
        let members: Vec<usize> = ker
            .members()
            .iter()
            .copied()
            .filter(|&x| {
                // x ∈ φ^i(K) iff φ^{-i}(x) ∈ K
                (1..=self.order).all(|i| ker.contains(self.iterate_signed(x, -(i as i64))))
            })
            .collect();
        Subgroup::from_members(&self.group, &members).expect("core is an intersection of subgroups")
    }

    /// The index `|A : Ker φ|`.
    pub fn skew_type(&self) -> u64 {
        (self.group.order() / self.kernel().order()) as u64
    }

    /// `θ ∘ φ ∘ θ⁻¹`, revalidated.
    pub fn conjugate(&self, theta: &Automorphism) -> Result<SkewMorphism> {
        let inv = theta.inverse();
        let table: Vec<usize> = (0..self.group.order())
            .map(|x| theta.apply(self.apply(inv.apply(x))))
            .collect();
        SkewMorphism::from_table(&self.group, table)
            .map_err(|e| Error::Consistency(format!("conjugate failed validation: {e}")))
    }

    /// `φ^k` as a plain permutation (it need not be a skew morphism).
    pub fn perm_power(&self, k: i64) -> GroupPermutation {
        GroupPermutation::from_table_unchecked(
            (0..self.group.order())
                .map(|x| self.iterate_signed(x, k))
                .collect(),
        )
    }
}

impl PartialEq for SkewMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.perm == other.perm
    }
}

impl Eq for SkewMorphism {}

impl PartialOrd for SkewMorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewMorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.group.factors(), self.perm.table()).cmp(&(other.group.factors(), other.perm.table()))
    }
}

impl std::hash::Hash for SkewMorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.perm.hash(state);
    }
}

impl fmt::Debug for SkewMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewMorphism")
            .field("group", &self.group.label())
            .field("perm", &self.perm.table())
            .field("order", &self.order)
            .field("power", &self.power)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pns9() -> SkewMorphism {
        let g = AbelianGroup::new(&[9]).unwrap();
        let t = (0..9i64)
            .map(|x| (-x - 3 * x * (x - 1) / 2).rem_euclid(9) as usize)
            .collect();
        SkewMorphism::from_table(&g, t).unwrap()
    }

    #[test]
    fn identity_morphism() {
        let g = AbelianGroup::new(&[6]).unwrap();
        let id = SkewMorphism::identity(&g);
        assert_eq!(id.order(), 1);
        assert!(id.power().iter().all(|&p| p == 0));
        assert!(id.is_automorphism() && id.is_smooth());
        assert_eq!(id.kernel().order(), 6);
        assert_eq!(id.skew_type(), 1);
    }

    #[test]
    fn pns_power_function() {
        let phi = pns9();
        assert_eq!(phi.order(), 6);
        for x in 0..9u64 {
            // π(x) = 1 - 2x mod 6
            let expected = (1 - 2 * x as i64).rem_euclid(6) as u64;
            assert_eq!(phi.power_of(x as usize), expected);
        }
        assert!(!phi.is_smooth());
        assert_eq!(phi.kernel().members(), &[0, 3, 6]);
        assert_eq!(phi.core().members(), &[0, 3, 6]);
        assert_eq!(phi.skew_type(), 3);
    }

    #[test]
    fn z4_swap_rejected_at_one() {
        let g = AbelianGroup::new(&[4]).unwrap();
        let err = SkewMorphism::from_table(&g, vec![0, 1, 3, 2]).unwrap_err();
        assert_eq!(err, Error::NoPower { a: 1, b: 1 });
    }

    #[test]
    fn identity_moved() {
        let g = AbelianGroup::new(&[3]).unwrap();
        let err = SkewMorphism::from_table(&g, vec![1, 0, 2]).unwrap_err();
        assert_eq!(err, Error::IdentityMoved { image: 1 });
    }

    #[test]
    fn csm_example_kernel_and_smoothness() {
        let g = AbelianGroup::new(&[6]).unwrap();
        let phi = SkewMorphism::from_table(&g, vec![0, 3, 2, 5, 4, 1]).unwrap();
        assert_eq!(phi.order(), 3);
        for x in 0..6u64 {
            assert_eq!(phi.power_of(x as usize), crate::numtheory::pow_mod(2, x, 3));
        }
        assert!(phi.is_smooth());
        assert_eq!(phi.kernel().members(), &[0, 2, 4]);
        assert_eq!(phi.skew_type(), 2);
    }

    #[test]
    fn automorphism_is_smooth_whole_kernel() {
        let g = AbelianGroup::new(&[7]).unwrap();
        let t = (0..7).map(|x| x * 3 % 7).collect();
        let phi = SkewMorphism::from_table(&g, t).unwrap();
        assert!(phi.is_automorphism() && phi.is_smooth());
        assert_eq!(phi.kernel().order(), 7);
        assert_eq!(phi.core().order(), 7);
        assert_eq!(phi.skew_type(), 1);
    }

    #[test]
    fn conjugation_invariants() {
        let phi = pns9();
        let g = phi.group().clone();
        let theta = Automorphism::new(
            &g,
            GroupPermutation::new((0..9).map(|x| 2 * x % 9).collect()).unwrap(),
        )
        .unwrap();
        let psi = phi.conjugate(&theta).unwrap();
        assert_eq!(psi.order(), 6);
        assert!(!psi.is_smooth());
        assert_eq!(psi.skew_type(), 3);
        assert_eq!(phi.conjugate(&Automorphism::identity(&g)).unwrap(), phi);
    }
}
