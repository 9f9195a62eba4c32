//! Complete enumeration of skew morphisms by lifting through kernel quotients.
//!
//! Every skew morphism `φ` of a nontrivial abelian group `A` has a nontrivial
//! kernel `K`, maps `K` onto itself (so `α = φ|K` is an automorphism of `K`),
//! and induces a skew morphism `φ̄` of `A/K` with `π̄(ā) ≡ π(a) (mod |φ̄|)`.
//! Since `π` is 1 on `K`, `φ(c + k) = φ(c) + α(k)`, and comparing with
//! `φ(c + k) = φ(c) + α^π(c)(k)` gives `π(c) ≡ 1 (mod |α|)`.
//!
//! So `φ` is fixed by `(K, φ̄, α)` plus one kernel offset `κ(q)` per coset:
//! `φ(rep(q) + k) = rep(φ̄(q)) + κ(q) + α(k)`. The search enumerates `K`,
//! the skew morphisms `φ̄` of the (smaller) quotient, `α ∈ Aut(K)` and the
//! order `m`, then runs two depth-first searches along the generators `g`:
//!
//! ```text
//! π(q + ḡ) = π(ḡ) + π(φ̄ ḡ) + ... + π(φ̄^(π(q)-1) ḡ)     (cosets only)
//! φ(a + g) = φ(a) + φ^π(a)(g)                           (offsets, π known)
//! ```
//!
//! The first also uses `Σ_{x ∈ O} π(x) ≡ 0 (mod |O|)` for every `φ̄`-orbit `O`,
//! which follows from `φ^m = 1`. Each search branches only when a value it
//! needs is unknown. Every completed candidate is fully revalidated, so
//! pruning never affects soundness.
//!
//! Power values are searched modulo a fixed `m`. That is exact: if `T` is a
//! φ-invariant generating set, the pointwise stabilizer of `T` inside `⟨φ⟩` is
//! normal in the skew product group and hence trivial, so `|φ|` is the lcm of
//! the orbit lengths of the generators. See `order_candidates` for the
//! finite list this gives; there is no order cap.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::abelian::automorphism::injective_homs;
use crate::abelian::{
    enumerate_automorphisms, enumerate_subgroups, invariant_factors_from_orders, quotient_group,
    AbelianGroup, Subgroup,
};
use crate::numtheory::{gcd, lcm};
use crate::skew::SkewMorphism;

/// Memoized enumeration keyed by factor list.
#[derive(Default)]
pub struct Enumerator {
    cache: Mutex<HashMap<Vec<u64>, Arc<Vec<SkewMorphism>>>>,
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every skew morphism of `group`, sorted by permutation table.
    pub fn all(&self, group: &AbelianGroup) -> Arc<Vec<SkewMorphism>> {
        if let Some(hit) = self.cache.lock().unwrap().get(group.factors()) {
            return hit.clone();
        }
        let mut found = self.compute(group);
        found.sort();
        let before = found.len();
        found.dedup();
        debug_assert_eq!(before, found.len(), "lifting produced a duplicate");
        let found = Arc::new(found);
        self.cache
            .lock()
            .unwrap()
            .insert(group.factors().to_vec(), found.clone());
        found
    }

    fn compute(&self, group: &AbelianGroup) -> Vec<SkewMorphism> {
        if group.is_trivial() {
            return vec![SkewMorphism::identity(group)];
        }
        let mut out: Vec<SkewMorphism> = enumerate_automorphisms(group, usize::MAX)
            .expect("no guard")
            .iter()
            .map(|a| SkewMorphism::from_automorphism(group, a))
            .collect();
        let subgroups = enumerate_subgroups(group, usize::MAX).expect("no guard");
        let mut jobs = Vec::new();
        for kernel in subgroups
            .into_iter()
            .filter(|k| k.order() > 1 && k.order() < group.order())
        {
            let (quotient, projection) = quotient_group(group, &kernel).expect("subgroup");
            let bars = self.all(&quotient);
            let alphas = kernel_automorphisms(group, &kernel);
            let ctx = Arc::new(LiftContext::new(group, &kernel, &quotient, projection));
            for bar in bars.iter() {
                for alpha in &alphas {
                    jobs.push((ctx.clone(), bar.clone(), alpha.clone()));
                }
            }
        }
        let lifted: Vec<SkewMorphism> = jobs
            .par_iter()
            .flat_map_iter(|(ctx, bar, alpha)| ctx.lift_all(bar, alpha))
            .collect();
        out.extend(lifted);
        out
    }
}

/// Automorphisms of a subgroup, as tables on the full group's indices
/// (entries outside the subgroup are unused).
fn kernel_automorphisms(group: &AbelianGroup, kernel: &Subgroup) -> Vec<Vec<usize>> {
    let members = kernel.members();
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let orders: Vec<u64> = (0..members.len())
        .map(|a| {
            let x = members[a];
            let mut o = 1;
            let mut v = x;
            while v != 0 {
                v = group.add(v, x);
                o += 1;
            }
            o
        })
        .collect();
    let local = AbelianGroup::new(&invariant_factors_from_orders(&orders)).expect("factors");
    let add = |a: usize, b: usize| pos[&group.add(members[a], members[b])];
    let isos = injective_homs(local.factors(), members.len(), add, |a| orders[a], false);
    let base = &isos[0];
    let mut base_inv = vec![0; members.len()];
    for (s, &t) in base.iter().enumerate() {
        base_inv[t] = s;
    }
    isos.iter()
        .map(|iso| {
            let mut table = vec![usize::MAX; group.order()];
            for (i, &x) in members.iter().enumerate() {
                table[x] = members[iso[base_inv[i]]];
            }
            table
        })
        .collect()
}

struct LiftContext {
    group: AbelianGroup,
    kernel: Subgroup,
    quotient: AbelianGroup,
    projection: Vec<usize>,
    reps: Vec<usize>,
    gens: Vec<usize>,
    kernel_exponent: u64,
}

struct Lift<'a> {
    ctx: &'a LiftContext,
    bar: &'a SkewMorphism,
    alpha: &'a [usize],
    alpha_order: u64,
    m: u64,
    // φ̄-orbit id of each coset, and the orbits themselves
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    qgens: Vec<usize>,
}

enum Step {
    Conflict,
    Need(usize),
    Done,
}

impl LiftContext {
    fn new(
        group: &AbelianGroup,
        kernel: &Subgroup,
        quotient: &AbelianGroup,
        projection: Vec<usize>,
    ) -> Self {
        let mut reps = vec![usize::MAX; quotient.order()];
        for a in group.elements() {
            if reps[projection[a]] == usize::MAX {
                reps[projection[a]] = a;
            }
        }
        LiftContext {
            group: group.clone(),
            kernel: kernel.clone(),
            quotient: quotient.clone(),
            projection,
            reps,
            gens: group.unit_generators(),
            kernel_exponent: kernel
                .members()
                .iter()
                .fold(1, |acc, &k| lcm(acc, group.element_order(k))),
        }
    }

    fn lift_all(&self, bar: &SkewMorphism, alpha: &[usize]) -> Vec<SkewMorphism> {
        let alpha_order = {
            let mut o = 1u64;
            for &k in self.kernel.members() {
                let mut x = alpha[k];
                let mut len = 1;
                while x != k {
                    x = alpha[x];
                    len += 1;
                }
                o = lcm(o, len);
            }
            o
        };
        let nq = self.quotient.order();
        let mut orbit_of = vec![usize::MAX; nq];
        let mut orbits = Vec::new();
        for q in 0..nq {
            if orbit_of[q] != usize::MAX {
                continue;
            }
            let mut orbit = vec![q];
            orbit_of[q] = orbits.len();
            let mut x = bar.apply(q);
            while x != q {
                orbit_of[x] = orbits.len();
                orbit.push(x);
                x = bar.apply(x);
            }
            orbits.push(orbit);
        }
        let mut qgens: Vec<usize> = self.gens.iter().map(|&g| self.projection[g]).collect();
        qgens.sort_unstable();
        qgens.dedup();
        qgens.retain(|&q| q != 0);
        let mut out = Vec::new();
        for m in self.order_candidates(bar, alpha_order) {
            let lift = Lift {
                ctx: self,
                bar,
                alpha,
                alpha_order,
                m,
                orbit_of: orbit_of.clone(),
                orbits: orbits.clone(),
                qgens: qgens.clone(),
            };
            let mut pi = vec![None; nq];
            let mut used = vec![false; m as usize];
            pi[0] = Some(1 % m);
            used[(1 % m) as usize] = true;
            let mut powers = Vec::new();
            lift.search_powers(pi, used, &mut powers);
            for pi in powers {
                let mut kappa = vec![None; nq];
                kappa[0] = Some(0);
                lift.search_offsets(&pi, kappa, &mut out);
            }
        }
        out
    }

    /// Orders `m = lcm_g(r̄_g · e_g)` divisible by `lcm(|φ̄|, |α|)`.
    ///
    /// Over one period `r̄_g` of the quotient orbit, `φ^r̄` acts on the coset
    /// `g + K` as the affine map `k ↦ d + α^r̄(k)`, so the orbit of `g` has
    /// length `r̄_g · e_g` with `e_g` dividing `|α^r̄|·exp(K)` and `e_g <= |K|`.
    fn order_candidates(&self, bar: &SkewMorphism, alpha_order: u64) -> Vec<u64> {
        let base = lcm(bar.order(), alpha_order);
        let kmax = self.kernel.order() as u64;
        let mut acc: BTreeSet<u64> = BTreeSet::from([1]);
        for &g in &self.gens {
            let q = self.projection[g];
            let mut rbar = 1u64;
            let mut x = bar.apply(q);
            while x != q {
                x = bar.apply(x);
                rbar += 1;
            }
            let beta_order = alpha_order / gcd(alpha_order, rbar);
            let bound = beta_order * self.kernel_exponent;
            let mut next = BTreeSet::new();
            for &v in &acc {
                for e in (1..=kmax).filter(|e| bound.is_multiple_of(*e)) {
                    next.insert(lcm(v, rbar * e));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .filter(|m| m % base == 0 && *m > 1)
            .collect()
    }
}

impl Lift<'_> {
    #[inline]
    fn phi(&self, kappa: &[Option<usize>], a: usize) -> Option<usize> {
        let c = self.ctx;
        let g = &c.group;
        let q = c.projection[a];
        let kq = kappa[q]?;
        let k = g.sub(a, c.reps[q]);
        Some(g.add(g.add(c.reps[self.bar.apply(q)], kq), self.alpha[k]))
    }

    fn allowed_pi(&self, q: usize, v: u64) -> bool {
        v % self.bar.order() == self.bar.power_of(q) && v % self.alpha_order == 1 % self.alpha_order
    }

    /// Power values per coset from `π(q + ḡ) = Σ_{i<π(q)} π(φ̄^i ḡ)`, which
    /// only involves cosets, plus `Σ_{orbit O} π ≡ 0 (mod |O|)` (from
    /// `σ(b, |φ|) ≡ 0`).
    fn propagate_powers(&self, pi: &mut [Option<u64>], used: &mut [bool]) -> Step {
        let quotient = &self.ctx.quotient;
        let nq = quotient.order();
        loop {
            let mut changed = false;
            for q in 0..nq {
                let Some(pq) = pi[q] else { continue };
                for &gq in &self.qgens {
                    let mut sum = 0u64;
                    let mut y = gq;
                    for _ in 0..pq {
                        match pi[y] {
                            Some(p) => sum += p,
                            None => return Step::Need(y),
                        }
                        y = self.bar.apply(y);
                    }
                    let sum = sum % self.m;
                    let t = quotient.add(q, gq);
                    match pi[t] {
                        Some(p) if p != sum => return Step::Conflict,
                        Some(_) => {}
                        None => {
                            if !self.allowed_pi(t, sum) || used[sum as usize] {
                                return Step::Conflict;
                            }
                            pi[t] = Some(sum);
                            used[sum as usize] = true;
                            if !self.orbit_sum_ok(pi, t) {
                                return Step::Conflict;
                            }
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        match (0..nq).find(|&q| pi[q].is_none()) {
            Some(q) => Step::Need(q),
            None => Step::Done,
        }
    }

    fn orbit_sum_ok(&self, pi: &[Option<u64>], q: usize) -> bool {
        let orbit = &self.orbits[self.orbit_of[q]];
        let mut sum = 0;
        for &x in orbit {
            match pi[x] {
                Some(p) => sum += p,
                None => return true,
            }
        }
        sum % orbit.len() as u64 == 0
    }

    fn search_powers(
        &self,
        mut pi: Vec<Option<u64>>,
        mut used: Vec<bool>,
        out: &mut Vec<Vec<u64>>,
    ) {
        match self.propagate_powers(&mut pi, &mut used) {
            Step::Conflict => {}
            Step::Need(q) => {
                for v in 0..self.m {
                    if used[v as usize] || !self.allowed_pi(q, v) {
                        continue;
                    }
                    let mut next = pi.clone();
                    next[q] = Some(v);
                    if !self.orbit_sum_ok(&next, q) {
                        continue;
                    }
                    let mut next_used = used.clone();
                    next_used[v as usize] = true;
                    self.search_powers(next, next_used, out);
                }
            }
            Step::Done => out.push(pi.into_iter().map(|p| p.expect("complete")).collect()),
        }
    }

    /// Kernel offsets from `φ(a + g) = φ(a) + φ^π(a)(g)` at coset
    /// representatives `a`.
    fn propagate_offsets(&self, pi: &[u64], kappa: &mut [Option<usize>]) -> Step {
        let c = self.ctx;
        let g = &c.group;
        let nq = c.quotient.order();
        let single = c.gens.len() == 1;
        loop {
            let mut changed = false;
            for q in 0..nq {
                if kappa[q].is_none() {
                    continue;
                }
                let a = c.reps[q];
                let fa = self.phi(kappa, a).expect("offset known");
                for &gen in &c.gens {
                    let mut x = gen;
                    let mut closed = false;
                    for j in 1..=pi[q] {
                        match self.phi(kappa, x) {
                            Some(y) => x = y,
                            None => return Step::Need(c.projection[x]),
                        }
                        // orbit lengths divide |φ|; a lone generator's is |φ|
                        if x == gen && !closed {
                            if single || !self.m.is_multiple_of(j) {
                                return Step::Conflict;
                            }
                            closed = true;
                        }
                    }
                    let t = g.add(a, gen);
                    let qt = c.projection[t];
                    let ft = g.add(fa, x);
                    if c.projection[ft] != self.bar.apply(qt) {
                        return Step::Conflict;
                    }
                    match self.phi(kappa, t) {
                        Some(existing) if existing != ft => return Step::Conflict,
                        Some(_) => {}
                        None => {
                            // κ(qt) = φ(t) - rep(φ̄ qt) - α(t - rep qt)
                            let k = g.sub(t, c.reps[qt]);
                            let off = g.sub(g.sub(ft, c.reps[self.bar.apply(qt)]), self.alpha[k]);
                            kappa[qt] = Some(off);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        match (0..nq).find(|&q| kappa[q].is_none()) {
            Some(q) => Step::Need(q),
            None => Step::Done,
        }
    }

    fn search_offsets(
        &self,
        pi: &[u64],
        mut kappa: Vec<Option<usize>>,
        out: &mut Vec<SkewMorphism>,
    ) {
        match self.propagate_offsets(pi, &mut kappa) {
            Step::Conflict => {}
            Step::Need(q) => {
                for &k in self.ctx.kernel.members() {
                    let mut next = kappa.clone();
                    next[q] = Some(k);
                    self.search_offsets(pi, next, out);
                }
            }
            Step::Done => {
                if let Some(phi) = self.finish(&kappa) {
                    out.push(phi);
                }
            }
        }
    }

    fn finish(&self, kappa: &[Option<usize>]) -> Option<SkewMorphism> {
        let g = &self.ctx.group;
        let table: Vec<usize> = g
            .elements()
            .map(|a| self.phi(kappa, a).expect("complete"))
            .collect();
        let phi = SkewMorphism::from_table(g, table).ok()?;
        if phi.order() != self.m || phi.kernel().members() != self.ctx.kernel.members() {
            return None;
        }
        Some(phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::oracle::brute_force_oracle;

    #[test]
    fn matches_oracle_on_tiny_groups() {
        let e = Enumerator::new();
        for factors in [
            vec![2],
            vec![3],
            vec![4],
            vec![6],
            vec![2, 2],
            vec![8],
            vec![9],
        ] {
            let g = AbelianGroup::new(&factors).unwrap();
            let fast = e.all(&g);
            let slow = brute_force_oracle(&g, 10).unwrap();
            assert_eq!(fast.as_slice(), slow.morphisms.as_slice(), "{factors:?}");
        }
    }
}
