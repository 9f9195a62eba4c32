use super::SkewMorphism;
use crate::error::{Error, Result};

fn require_cyclic(phi: &SkewMorphism) -> Result<()> {
    if phi.group().factors().len() <= 1 {
        Ok(())
    } else {
        Err(Error::NotCyclic(phi.group().label()))
    }
}

/// Whether `(φ, ψ)` on `(Z_m, Z_n)` is a reciprocal pair: `|φ|` divides `n`,
/// `|ψ|` divides `m`, `π(x) ≡ -ψ^{-x}(-1) (mod |φ|)` for all `x` and
/// symmetrically for `ψ`.
pub fn is_reciprocal_pair(phi: &SkewMorphism, psi: &SkewMorphism) -> Result<bool> {
    require_cyclic(phi)?;
    require_cyclic(psi)?;
    let m = phi.group().order() as u64;
    let n = psi.group().order() as u64;
    if !n.is_multiple_of(phi.order()) || !m.is_multiple_of(psi.order()) {
        return Ok(false);
    }
    Ok(cross_condition(phi, psi) && cross_condition(psi, phi))
}

// π_φ(x) ≡ -ψ^{-x}(-1) (mod |φ|) for all x in the group of φ
fn cross_condition(phi: &SkewMorphism, psi: &SkewMorphism) -> bool {
    let m = phi.group().order();
    let n = psi.group().order();
    let minus_one = n - 1;
    (0..m).all(|x| {
        let v = psi.iterate_signed(minus_one, -(x as i64));
        let neg = ((n - v) % n) as u64;
        neg % phi.order() == phi.power_of(x)
    })
}
