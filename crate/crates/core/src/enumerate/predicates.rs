use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::numtheory::{is_square_free, valuation};

/// Whether every skew morphism of `Z_n` is smooth: `n = 2^e·n1` with
/// `e <= 4` and `n1` odd and square-free.
pub fn smooth_only_predicate(n: u64) -> bool {
    assert!(n >= 1, "n must be positive");
    let e = valuation(n, 2);
    e <= 4 && is_square_free(n >> e)
}

/// Necessary condition for a non-cyclic abelian group to have only smooth
/// skew morphisms: the odd part of the order is square-free and no cyclic
/// factor has 2-part `2^e` with `e >= 5`.
pub fn theorem2_necessary(group: &AbelianGroup) -> Result<bool> {
    if group.is_cyclic() {
        return Err(Error::Cyclic(format!(
            "{} is cyclic; use smooth_only_predicate",
            group.label()
        )));
    }
    let n = group.order() as u64;
    let odd = n >> valuation(n, 2);
    let big_two = group.factors().iter().any(|&f| valuation(f, 2) >= 5);
    Ok(is_square_free(odd) && !big_two)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_predicate() {
        assert!(smooth_only_predicate(1));
        assert!(smooth_only_predicate(16));
        assert!(!smooth_only_predicate(32));
        assert!(!smooth_only_predicate(9));
        assert!(smooth_only_predicate(105));
        assert!(smooth_only_predicate(48));
        assert!(!smooth_only_predicate(36));
    }

    #[test]
    fn noncyclic_predicate() {
        let g = |f: &[u64]| AbelianGroup::new(f).unwrap();
        assert!(theorem2_necessary(&g(&[2, 2])).unwrap());
        assert!(!theorem2_necessary(&g(&[32, 2])).unwrap());
        assert!(!theorem2_necessary(&g(&[3, 3])).unwrap());
        assert!(matches!(
            theorem2_necessary(&g(&[6])),
            Err(Error::Cyclic(_))
        ));
    }
}
