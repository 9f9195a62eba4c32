use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, multiplicative_order};
use crate::skew::SkewMorphism;

/// Parameters of a proper skew morphism of `Z_p × Z_p` with basis
/// `a = (1,0)`, `x = (0,1)` and kernel `⟨a⟩`:
///
/// `i·a + j·x ↦ (r·i + d·r·ν·j(j−1)/2)·a + j·(b + r·x)`
///
/// where `b ∈ ⟨a⟩` is determined by the triple `(d, ν, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NseParams {
    pub p: u64,
    pub d: u64,
    pub nu: u64,
    pub r: u64,
    /// Multiplicative order of `r` mod `p`.
    pub k: u64,
}

impl NseParams {
    pub fn new(p: u64, d: u64, nu: u64, r: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::Parameter(format!("p={p} must be an odd prime")));
        }
        if !(1..p).contains(&d) || !(1..p).contains(&nu) || !(2..p).contains(&r) {
            return Err(Error::Parameter(format!(
                "need d, nu in [1, p) and r in [2, p) (p={p}, d={d}, nu={nu}, r={r})"
            )));
        }
        let k = multiplicative_order(r, p).expect("r is a unit mod a prime");
        Ok(NseParams { p, d, nu, r, k })
    }

    /// Every triple for `p`, in lexicographic order.
    pub fn all(p: u64) -> Result<Vec<NseParams>> {
        NseParams::new(p, 1, 1, 2)?;
        let mut out = Vec::new();
        for d in 1..p {
            for nu in 1..p {
                for r in 2..p {
                    out.push(NseParams::new(p, d, nu, r)?);
                }
            }
        }
        Ok(out)
    }

    /// The coefficient `β` with `b = β·a`, and the resulting morphism.
    pub fn solve(&self) -> Result<(u64, SkewMorphism)> {
        let group = AbelianGroup::new(&[self.p, self.p])?;
        let mut hits = Vec::new();
        for beta in 0..self.p {
            if let Some(phi) = self.try_beta(&group, beta) {
                hits.push((beta, phi));
            }
        }
        match hits.len() {
            1 => Ok(hits.pop().expect("one hit")),
            0 => Err(Error::Consistency(format!(
                "no kernel element b gives a skew morphism with the stated power function for {self:?}"
            ))),
            count => Err(Error::Consistency(format!(
                "{count} kernel elements b fit {self:?}; expected exactly one"
            ))),
        }
    }

    fn try_beta(&self, group: &AbelianGroup, beta: u64) -> Option<SkewMorphism> {
        let NseParams { p, d, nu, r, k } = *self;
        let table: Vec<usize> = group
            .elements()
            .map(|e| {
                let c = group.coords(e);
                let (i, j) = (c[0], c[1]);
                let tri = j * j.saturating_sub(1) / 2 % p;
                let first = (r * i + d * r % p * nu % p * tri + beta * j) % p;
                group.index_of(&[first, r * j % p])
            })
            .collect();
        let phi = SkewMorphism::from_table(group, table).ok()?;
        let m = p * k;
        let matches = phi.order() == m
            && group.elements().all(|e| {
                let j = group.coords(e)[1];
                phi.power_of(e) == (1 + j * nu * k) % m
            });
        matches.then_some(phi)
    }
}

/// Builds the morphism and checks order `pk`, the power function, kernel
/// `⟨a⟩` and non-smoothness.
pub fn nse_construct(params: &NseParams) -> Result<SkewMorphism> {
    let fresh = NseParams::new(params.p, params.d, params.nu, params.r)?;
    let (_, phi) = fresh.solve()?;
    let p = params.p as usize;
    let kernel_ok = phi.kernel().members() == (0..p).map(|i| i * p).collect::<Vec<_>>();
    if !kernel_ok || phi.is_smooth() {
        return Err(Error::Consistency(format!(
            "{params:?}: kernel is not <a> or the morphism is smooth"
        )));
    }
    Ok(phi)
}
