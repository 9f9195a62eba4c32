use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime, mod_inverse, multiplicative_order, pow_mod};
use crate::skew::SkewMorphism;

/// Parameters of a proper skew morphism of `Z_n` whose square is an
/// automorphism, `x ↦ s·x − (x(x−1)/2)·(n/k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootParams {
    pub n: u64,
    pub k: u64,
    pub s: u64,
    /// Half the multiplicative order of `s` mod `n/k`.
    pub ell: u64,
    pub w: u64,
    /// Inverse of `w` mod `k`.
    pub w_inv: u64,
    /// Order `2kℓ`.
    pub m: u64,
}

impl RootParams {
    /// Reduces `s` mod `n` and checks conditions (a) and (b).
    pub fn new(n: u64, k: u64, s: u64) -> Result<Self> {
        if k < 2 || n < 2 {
            return Err(Error::Parameter(format!("need n, k >= 2 (n={n}, k={k})")));
        }
        let s = s % n;
        if k % 2 == 1 {
            if !n.is_multiple_of(k * k) || gcd(s, n) != 1 {
                return Err(Error::Parameter(format!(
                    "condition (a): k^2 must divide n and s must be a unit mod n (n={n}, k={k}, s={s})"
                )));
            }
        } else if !n.is_multiple_of(2 * k * k) || gcd(s, n / 2) != 1 {
            return Err(Error::Parameter(format!(
                "condition (a): 2k^2 must divide n and s must be a unit mod n/2 (n={n}, k={k}, s={s})"
            )));
        }
        if !(s + 1).is_multiple_of(k) {
            return Err(Error::Parameter(format!(
                "condition (b): s={s} is not -1 mod k={k}"
            )));
        }
        let nk = n / k;
        let order = multiplicative_order(s, nk).ok_or_else(|| {
            Error::Parameter(format!("condition (b): s={s} is not a unit mod {nk}"))
        })?;
        if order % 2 != 0 {
            return Err(Error::Parameter(format!(
                "condition (b): s={s} has odd multiplicative order {order} mod {nk}"
            )));
        }
        let ell = order / 2;
        // (s^(2ℓ) − 1)/(n/k) mod k only needs s^(2ℓ) mod n
        let lifted = (pow_mod(s, 2 * ell, n) + n - 1) % n / nk % k;
        let correction = (s * s.saturating_sub(1) / 2) % k * (ell % k) % k;
        let w = (lifted + k - correction) % k;
        let w_inv = mod_inverse(w, k).ok_or_else(|| {
            Error::Parameter(format!("condition (b): w={w} is not a unit mod k={k}"))
        })?;
        Ok(RootParams {
            n,
            k,
            s,
            ell,
            w,
            w_inv,
            m: 2 * k * ell,
        })
    }
}

/// Builds the morphism, revalidates it, and checks order `2kℓ`, skew-type
/// `k`, `π(x) ≡ 1 + 2xw'ℓ (mod m)` and that `φ²` is an automorphism.
pub fn root_construct(params: &RootParams) -> Result<SkewMorphism> {
    let fresh = RootParams::new(params.n, params.k, params.s)?;
    if fresh != *params {
        return Err(Error::Parameter(format!(
            "derived values disagree: expected {fresh:?}"
        )));
    }
    let RootParams {
        n,
        k,
        s,
        w_inv,
        ell,
        m,
        ..
    } = *params;
    let nk = n / k;
    let table: Vec<usize> = (0..n)
        .map(|x| {
            let quad = (x * x.saturating_sub(1) / 2) % n * nk % n;
            ((s * x % n + n - quad) % n) as usize
        })
        .collect();
    let group = AbelianGroup::cyclic(n)?;
    let phi = SkewMorphism::from_table(&group, table)?;
    let square = phi.perm_power(2);
    let square_is_auto = group.elements().all(|a| {
        group
            .elements()
            .all(|b| square.apply(group.add(a, b)) == group.add(square.apply(a), square.apply(b)))
    });
    let consistent = phi.order() == m
        && phi.skew_type() == k
        && square_is_auto
        && (0..n).all(|x| phi.power_of(x as usize) == (1 + 2 * x % m * w_inv % m * ell) % m);
    if !consistent {
        return Err(Error::Consistency(format!(
            "{params:?} gives order {}, skew-type {}, square automorphism {square_is_auto}",
            phi.order(),
            phi.skew_type()
        )));
    }
    Ok(phi)
}

/// Non-smooth skew morphism of `Z_{p^e}`: `k = p`, `s = −1`.
pub fn pns_witness_odd(p: u64, e: u32) -> Result<SkewMorphism> {
    if p < 3 || !is_prime(p) || e < 2 {
        return Err(Error::Parameter(format!(
            "need an odd prime p and e >= 2 (p={p}, e={e})"
        )));
    }
    let n = p.pow(e);
    pns_checked(&RootParams::new(n, p, n - 1)?, 2 * p)
}

/// Non-smooth skew morphism of `Z_{2^e}`: `k = 4`, `s = −1`.
pub fn pns_witness_two(e: u32) -> Result<SkewMorphism> {
    if e < 5 {
        return Err(Error::Parameter(format!("need e >= 5 (e={e})")));
    }
    let n = 1u64 << e;
    pns_checked(&RootParams::new(n, 4, n - 1)?, 8)
}

fn pns_checked(params: &RootParams, m: u64) -> Result<SkewMorphism> {
    let phi = root_construct(params)?;
    let ok = phi.order() == m
        && phi.power_of(1) == m - 1
        && phi.power_of(phi.apply(1)) == 3
        && !phi.is_smooth();
    if !ok {
        return Err(Error::Consistency(format!(
            "{params:?} is not the expected non-smooth witness"
        )));
    }
    Ok(phi)
}
