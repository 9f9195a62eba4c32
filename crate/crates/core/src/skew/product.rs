use std::collections::{HashMap, HashSet};

use super::SkewMorphism;
use crate::abelian::Subgroup;
use crate::error::{Error, Result};

/// The permutation group `⟨L_A, φ⟩ = L_A ⟨φ⟩`.
///
/// Each element is named by the unique pair `(a, i)` with element
/// `L_a ∘ φ^i`; products follow the coset rule
/// `φ^i L_b = L_{φ^i(b)} φ^{σ(b,i)}`.
#[derive(Clone, Debug)]
pub struct SkewProductGroup {
    morphism: SkewMorphism,
    elements: Vec<(usize, u64)>,
    // sigma[b * m + i] = σ(b, i)
    sigma: Vec<u64>,
}

impl SkewProductGroup {
    /// Builds the element list and checks it against real permutation tables:
    /// all `|A|·|φ|` tables are distinct and the set is closed under right
    /// multiplication by the generators `L_g` and `φ`.
    pub fn new(morphism: &SkewMorphism) -> Result<Self> {
        let group = morphism.group();
        let n = group.order();
        let m = morphism.order();
        let mut sigma = vec![0u64; n * m as usize];
        for b in 0..n {
            let mut acc = 0;
            for i in 0..m {
                sigma[b * m as usize + i as usize] = acc;
                acc = (acc + morphism.power_of(morphism.iterate(b, i))) % m;
            }
        }
        let elements: Vec<(usize, u64)> =
            (0..n).flat_map(|a| (0..m).map(move |i| (a, i))).collect();
        let pg = SkewProductGroup {
            morphism: morphism.clone(),
            elements,
            sigma,
        };
        pg.verify()?;
        Ok(pg)
    }

    fn verify(&self) -> Result<()> {
        let group = self.morphism.group();
        let mut index: HashMap<Vec<usize>, (usize, u64)> = HashMap::new();
        for &e in &self.elements {
            if index.insert(self.table(e), e).is_some() {
                return Err(Error::Consistency(format!(
                    "skew product element {e:?} repeats a permutation"
                )));
            }
        }
        let mut gens: Vec<(usize, u64)> = group
            .unit_generators()
            .into_iter()
            .map(|g| (g, 0))
            .collect();
        gens.push((0, 1 % self.morphism.order()));
        for &x in &self.elements {
            for &s in &gens {
                let tx = self.table(x);
                let ts = self.table(s);
                let composed: Vec<usize> = ts.iter().map(|&v| tx[v]).collect();
                match index.get(&composed) {
                    Some(&found) if found == self.compose(x, s) => {}
                    Some(&found) => {
                        return Err(Error::Consistency(format!(
                            "coset rule gives {:?} but tables give {found:?}",
                            self.compose(x, s)
                        )))
                    }
                    None => {
                        return Err(Error::Consistency(
                            "skew product set not closed under composition".into(),
                        ))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn morphism(&self) -> &SkewMorphism {
        &self.morphism
    }

    pub fn elements(&self) -> &[(usize, u64)] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn sigma(&self, b: usize, i: u64) -> u64 {
        self.sigma[b * self.morphism.order() as usize + i as usize]
    }

    /// `(L_a φ^i)(L_b φ^j) = L_{a + φ^i(b)} φ^{σ(b,i) + j}`.
    pub fn compose(&self, x: (usize, u64), y: (usize, u64)) -> (usize, u64) {
        let g = self.morphism.group();
        let m = self.morphism.order();
        let (a, i) = x;
        let (b, j) = y;
        (
            g.add(a, self.morphism.iterate(b, i)),
            (self.sigma(b, i) + j) % m,
        )
    }

    /// Permutation table of `L_a ∘ φ^i`.
    pub fn table(&self, x: (usize, u64)) -> Vec<usize> {
        let g = self.morphism.group();
        let (a, i) = x;
        (0..g.order())
            .map(|v| g.add(a, self.morphism.iterate(v, i)))
            .collect()
    }

    /// Largest `B ≤ A` with `L_B` normal in the product group: the
    /// intersection of the conjugates `φ^i L_A φ^{-i}`.
    pub fn core_of_translations(&self) -> Subgroup {
        let phi = &self.morphism;
        let g = phi.group();
        let m = phi.order() as i64;
        let members: Vec<usize> = g
            .elements()
            .filter(|&b| {
                (0..m).all(|i| {
                    // φ^{-i} L_b φ^{i} must be a translation
                    let shift = phi.iterate_signed(g.add(b, phi.iterate_signed(0, i)), -i);
                    g.elements().all(|x| {
                        let y = phi.iterate_signed(g.add(b, phi.iterate_signed(x, i)), -i);
                        y == g.add(x, shift)
                    })
                })
            })
            .collect();
        Subgroup::from_members(g, &members).expect("core of L_A is a subgroup")
    }

    /// Whether `⟨φ⟩` contains no nontrivial subgroup normal in the product
    /// group, checked by conjugating each `φ^j` by all translations.
    pub fn is_corefree_cyclic_part(&self) -> bool {
        let phi = &self.morphism;
        let g = phi.group();
        let m = phi.order();
        let powers: HashSet<Vec<usize>> = (0..m as i64)
            .map(|k| phi.perm_power(k).into_table())
            .collect();
        (1..m).all(|j| {
            g.elements().any(|a| {
                // L_a^{-1} φ^j L_a
                let conj: Vec<usize> = g
                    .elements()
                    .map(|x| g.sub(phi.iterate(g.add(a, x), j), a))
                    .collect();
                !powers.contains(&conj)
            })
        })
    }
}

pub fn skew_product_group(phi: &SkewMorphism) -> Result<SkewProductGroup> {
    SkewProductGroup::new(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbelianGroup;

    fn pns9() -> SkewMorphism {
        let g = AbelianGroup::new(&[9]).unwrap();
        let t = (0..9i64)
            .map(|x| (-x - 3 * x * (x - 1) / 2).rem_euclid(9) as usize)
            .collect();
        SkewMorphism::from_table(&g, t).unwrap()
    }

    #[test]
    fn identity_gives_translations() {
        let g = AbelianGroup::new(&[5]).unwrap();
        let pg = skew_product_group(&SkewMorphism::identity(&g)).unwrap();
        assert_eq!(pg.order(), 5);
        assert!(pg.is_corefree_cyclic_part());
        assert_eq!(pg.core_of_translations().order(), 5);
    }

    #[test]
    fn pns_product_has_54_elements() {
        let phi = pns9();
        let pg = skew_product_group(&phi).unwrap();
        assert_eq!(pg.order(), 54);
        // every pair composes inside the list, matching real tables
        let tables: HashMap<Vec<usize>, (usize, u64)> =
            pg.elements().iter().map(|&e| (pg.table(e), e)).collect();
        for &x in pg.elements() {
            for &y in pg.elements() {
                let tx = pg.table(x);
                let composed: Vec<usize> = pg.table(y).iter().map(|&v| tx[v]).collect();
                assert_eq!(tables[&composed], pg.compose(x, y));
            }
        }
        assert_eq!(pg.core_of_translations().members(), &[0, 3, 6]);
        assert!(pg.is_corefree_cyclic_part());
    }

    #[test]
    fn multiplication_by_five_on_z6() {
        let g = AbelianGroup::new(&[6]).unwrap();
        let phi = SkewMorphism::from_table(&g, (0..6).map(|x| 5 * x % 6).collect()).unwrap();
        assert_eq!(skew_product_group(&phi).unwrap().order(), 12);
    }
}
