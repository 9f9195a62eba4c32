use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::enumerate::{Enumerator, Guard};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, multiplicative_order, pow_mod};
use crate::skew::SkewMorphism;

/// Parameters of a proper smooth skew morphism of `Z_n`,
/// `x ↦ x + r·k·(1 + τ + ... + τ^(x-1))` with `τ = 1 + s + ... + s^(t-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CsmParams {
    pub n: u64,
    pub k: u64,
    pub r: u64,
    pub s: u64,
    pub t: u64,
    /// Order of the resulting skew morphism.
    pub m: u64,
}

/// `1 + s + ... + s^(count-1)` mod `modulus`.
pub fn geometric_sum(s: u64, count: u64, modulus: u64) -> u64 {
    let mut acc = 0u64;
    let mut term = 1 % modulus;
    for _ in 0..count {
        acc = (acc + term) % modulus;
        term = term * (s % modulus) % modulus;
    }
    acc
}

fn reject(condition: &str, detail: String) -> Error {
    Error::Parameter(format!("condition {condition}: {detail}"))
}

impl CsmParams {
    /// Reduces `r` and `s` modulo `n/k`, derives `m`, and checks every
    /// condition.
    pub fn new(n: u64, k: u64, r: u64, s: u64, t: u64) -> Result<Self> {
        if n < 2 || k < 2 || k >= n || !n.is_multiple_of(k) {
            return Err(Error::Parameter(format!(
                "k={k} must be a proper divisor of n={n} greater than 1"
            )));
        }
        let nk = n / k;
        let (r, s) = (r % nk, s % nk);
        if gcd(s, nk) != 1 {
            return Err(Error::Parameter(format!("s={s} is not a unit mod {nk}")));
        }
        let m = csm_order(r, s, nk);
        Self::check(n, k, r, s, t, m)?;
        Ok(CsmParams { n, k, r, s, t, m })
    }

    fn check(n: u64, k: u64, r: u64, s: u64, t: u64, m: u64) -> Result<()> {
        let nk = n / k;
        if t == 0 || gcd(t, m) != 1 {
            return Err(Error::Parameter(format!("t={t} is not a unit mod m={m}")));
        }
        if multiplicative_order(t, m) != Some(k) {
            return Err(reject(
                "(b)",
                format!("t={t} does not have multiplicative order {k} mod m={m}"),
            ));
        }
        let tau = geometric_sum(s, t, nk);
        let rhs = r * geometric_sum(tau, k, nk) % nk;
        if (s + nk - 1) % nk != rhs {
            return Err(reject("(c)", format!("s-1 is not r(τ^k-1)/(τ-1) mod {nk}")));
        }
        if pow_mod(s, t - 1, nk) != 1 % nk {
            return Err(reject("(d)", format!("s^(t-1) is not 1 mod {nk}")));
        }
        Ok(())
    }

    pub fn tau(&self) -> u64 {
        geometric_sum(self.s, self.t, self.n / self.k)
    }
}

/// Least `m >= 1` with `r·(1 + s + ... + s^(m-1)) ≡ 0 (mod nk)`.
fn csm_order(r: u64, s: u64, nk: u64) -> u64 {
    let mut acc = 0u64;
    let mut term = 1 % nk;
    let mut m = 0;
    loop {
        acc = (acc + term) % nk;
        term = term * s % nk;
        m += 1;
        if (r * acc).is_multiple_of(nk) {
            return m;
        }
    }
}

/// Builds the morphism, revalidates it, and checks order `m`, skew-type `k`,
/// smoothness and `π(x) ≡ t^x (mod m)`.
pub fn csm_construct(params: &CsmParams) -> Result<SkewMorphism> {
    let CsmParams { n, k, r, s, t, m } = *params;
    let fresh = CsmParams::new(n, k, r, s, t)?;
    if fresh.m != m {
        return Err(reject("(a)", format!("order is {}, not {m}", fresh.m)));
    }
    let nk = n / k;
    let tau = params.tau();
    let mut table = Vec::with_capacity(n as usize);
    let mut sum = 0u64; // 1 + τ + ... + τ^(x-1) mod n/k
    let mut power = 1 % nk;
    for x in 0..n {
        table.push(((x + (r % nk) * k % n * sum) % n) as usize);
        sum = (sum + power) % nk;
        power = power * tau % nk;
    }
    let group = AbelianGroup::cyclic(n)?;
    let phi = SkewMorphism::from_table(&group, table)?;
    let consistent = phi.order() == m
        && phi.skew_type() == k
        && phi.is_smooth()
        && (0..n).all(|x| phi.power_of(x as usize) == pow_mod(t, x, m));
    if !consistent {
        return Err(Error::Consistency(format!(
            "{params:?} gives order {}, skew-type {}, smooth {}",
            phi.order(),
            phi.skew_type(),
            phi.is_smooth()
        )));
    }
    Ok(phi)
}

/// All parameter tuples for `Z_n` in canonical ranges: `r ∈ [0, n/k)`,
/// `s ∈ [1, n/k)` a unit, `t ∈ [1, m)` a unit.
pub fn enumerate_csm_params(n: u64) -> Vec<CsmParams> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for k in divisors(n).into_iter().filter(|&k| k > 1 && k < n) {
        let nk = n / k;
        for r in 0..nk {
            for s in (1..nk).filter(|&s| gcd(s, nk) == 1) {
                let m = csm_order(r, s, nk);
                for t in 1..m {
                    if CsmParams::check(n, k, r, s, t, m).is_ok() {
                        out.push(CsmParams { n, k, r, s, t, m });
                    }
                }
            }
        }
    }
    out
}

/// Outcome of comparing the smooth family with enumeration on `Z_n`.
#[derive(Clone, Debug)]
pub struct CsmComparison {
    pub n: u64,
    pub family: usize,
    pub enumerated: usize,
    /// Smallest table present on one side only, with the side it is missing from.
    pub counterexample: Option<(SkewMorphism, &'static str)>,
}

impl CsmComparison {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Set equality of the family over [`enumerate_csm_params`] with the proper
/// smooth skew morphisms of `Z_n` found by enumeration.
pub fn csm_completeness(n: u64, enumerator: &Enumerator, guard: Guard) -> Result<CsmComparison> {
    let group = AbelianGroup::cyclic(n)?;
    guard.check(&group)?;
    let mut family: BTreeMap<Vec<usize>, SkewMorphism> = BTreeMap::new();
    for params in enumerate_csm_params(n) {
        let phi = csm_construct(&params)?;
        family.insert(phi.table().to_vec(), phi);
    }
    let enumerated: BTreeMap<Vec<usize>, SkewMorphism> = enumerator
        .all(&group)
        .iter()
        .filter(|phi| phi.is_proper() && phi.is_smooth())
        .map(|phi| (phi.table().to_vec(), phi.clone()))
        .collect();
    let missing_from_family = enumerated
        .iter()
        .find(|(t, _)| !family.contains_key(*t))
        .map(|(_, phi)| (phi.clone(), "family"));
    let missing_from_enumeration = family
        .iter()
        .find(|(t, _)| !enumerated.contains_key(*t))
        .map(|(_, phi)| (phi.clone(), "enumeration"));
    Ok(CsmComparison {
        n,
        family: family.len(),
        enumerated: enumerated.len(),
        counterexample: missing_from_family.or(missing_from_enumeration),
    })
}
