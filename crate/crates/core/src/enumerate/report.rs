use std::time::Duration;

use crate::abelian::AbelianGroup;
use crate::skew::SkewMorphism;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub total: usize,
    pub automorphisms: usize,
    pub proper: usize,
    pub smooth: usize,
    pub nonsmooth: usize,
}

impl Counts {
    pub fn of(morphisms: &[SkewMorphism]) -> Self {
        let automorphisms = morphisms.iter().filter(|m| m.is_automorphism()).count();
        let smooth = morphisms.iter().filter(|m| m.is_smooth()).count();
        Counts {
            total: morphisms.len(),
            automorphisms,
            proper: morphisms.len() - automorphisms,
            smooth,
            nonsmooth: morphisms.len() - smooth,
        }
    }
}

/// All skew morphisms of one group, sorted by permutation table.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub group: AbelianGroup,
    pub morphisms: Vec<SkewMorphism>,
    pub counts: Counts,
    pub elapsed: Duration,
}

impl EnumerationReport {
    pub(crate) fn new(
        group: &AbelianGroup,
        mut morphisms: Vec<SkewMorphism>,
        elapsed: Duration,
    ) -> Self {
        morphisms.sort();
        morphisms.dedup();
        let counts = Counts::of(&morphisms);
        EnumerationReport {
            group: group.clone(),
            morphisms,
            counts,
            elapsed,
        }
    }

    pub fn nonsmooth(&self) -> impl Iterator<Item = &SkewMorphism> {
        self.morphisms.iter().filter(|m| !m.is_smooth())
    }
}
