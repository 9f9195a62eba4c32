use std::collections::HashMap;

use super::SkewMorphism;
use crate::abelian::{enumerate_automorphisms, Automorphism};
use crate::error::Result;

/// Partition `morphisms` (all on the same group) into orbits of the
/// conjugation action of `autos`. Classes list indices into the input, each
/// class sorted, classes ordered by their first index.
pub fn equivalence_classes_under(
    morphisms: &[SkewMorphism],
    autos: &[Automorphism],
) -> Vec<Vec<usize>> {
    let by_table: HashMap<&[usize], usize> = morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.table(), i))
        .collect();
    let mut class_of = vec![usize::MAX; morphisms.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..morphisms.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![i];
        class_of[i] = c;
        for theta in autos {
            let inv = theta.inverse();
            let phi = &morphisms[i];
            let conj: Vec<usize> = (0..phi.group().order())
                .map(|x| theta.apply(phi.apply(inv.apply(x))))
                .collect();
            if let Some(&j) = by_table.get(conj.as_slice()) {
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// As [`equivalence_classes_under`], using the full automorphism group.
pub fn equivalence_classes(morphisms: &[SkewMorphism]) -> Result<Vec<Vec<usize>>> {
    let Some(first) = morphisms.first() else {
        return Ok(Vec::new());
    };
    let autos = enumerate_automorphisms(first.group(), usize::MAX)?;
    Ok(equivalence_classes_under(morphisms, &autos))
}
