use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, lcm};

/// Groups up to this order carry a precomputed addition table.
const TABLE_LIMIT: usize = 512;

/// A finite abelian group `Z_{f_1} x ... x Z_{f_k}`.
///
/// Elements are addressed by a mixed-radix index over the factors, with the
/// last factor least significant, so `(1, 3)` in `Z2xZ4` has index `1*4+3 = 7`.
/// Index 0 is the identity. The empty factor list is the trivial group.
#[derive(Clone)]
pub struct AbelianGroup {
    factors: Vec<u64>,
    order: usize,
    table: Option<Arc<[u32]>>,
}

/// Coordinates of one element, `coords[i] < factors[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub coords: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: &[u64]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidFactor(bad));
        }
        let order = factors.iter().product::<u64>() as usize;
        let mut group = AbelianGroup {
            factors: factors.to_vec(),
            order,
            table: None,
        };
        if order <= TABLE_LIMIT {
            let mut t = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    t.push(group.add_slow(a, b) as u32);
                }
            }
            group.table = Some(t.into());
        }
        Ok(group)
    }

    pub fn trivial() -> Self {
        AbelianGroup::new(&[]).expect("empty factor list is valid")
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 1 {
            Ok(Self::trivial())
        } else {
            Self::new(&[n])
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Least common multiple of the factors.
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &f| lcm(acc, f))
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponent() as usize == self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Unit vectors, one per factor; together they generate the group.
    pub fn unit_generators(&self) -> Vec<usize> {
        let k = self.factors.len();
        (0..k)
            .map(|i| {
                let mut c = vec![0; k];
                c[i] = 1;
                self.index_of(&c)
            })
            .collect()
    }

    pub fn check(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    pub fn coords(&self, mut a: usize) -> Vec<u64> {
        let mut c = vec![0; self.factors.len()];
        for (i, &f) in self.factors.iter().enumerate().rev() {
            c[i] = a as u64 % f;
            a /= f as usize;
        }
        c
    }

    pub fn element(&self, a: usize) -> GroupElement {
        GroupElement {
            coords: self.coords(a),
        }
    }

    /// Index of a coordinate tuple; coordinates are reduced modulo the factors.
    pub fn index_of(&self, coords: &[u64]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &f)| acc * f as usize + (c % f) as usize)
    }

    fn add_slow(&self, mut a: usize, mut b: usize) -> usize {
        let mut out = 0usize;
        let mut scale = 1usize;
        for &f in self.factors.iter().rev() {
            let f = f as usize;
            let d = (a % f + b % f) % f;
            out += d * scale;
            scale *= f;
            a /= f;
            b /= f;
        }
        out
    }

    /// Sum of two elements. Indices must be in range.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.add_slow(a, b),
        }
    }

    pub fn try_add(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| (f - x) % f)
            .collect();
        self.index_of(&c)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k * a` for a non-negative multiplier.
    pub fn scale(&self, a: usize, k: u64) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| ((x as u128 * k as u128) % f as u128) as u64)
            .collect();
        self.index_of(&c)
    }

    /// Least `k >= 1` with `k * a = 0`.
    pub fn element_order(&self, a: usize) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &f)| lcm(acc, f / crate::numtheory::gcd(x, f)))
    }

    pub fn try_element_order(&self, a: usize) -> Result<u64> {
        self.check(a)?;
        Ok(self.element_order(a))
    }

    /// Literal form, e.g. `Z2xZ4`; the trivial group prints as `Z1`.
    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".to_string();
        }
        self.factors
            .iter()
            .map(|f| format!("Z{f}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Parse `Z6`, `Z2xZ4`, `z3xz3`. `Z1` on its own denotes the trivial group.
    pub fn parse(literal: &str) -> Result<Self> {
        let bad = || Error::BadLiteral(literal.to_string());
        let s = literal.trim().to_ascii_lowercase();
        if s.is_empty() {
            return Err(bad());
        }
        if s == "z1" {
            return Ok(Self::trivial());
        }
        let mut factors = Vec::new();
        for part in s.split('x') {
            let digits = part.trim().strip_prefix('z').ok_or_else(bad)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let f: u64 = digits.parse().map_err(|_| bad())?;
            factors.push(f);
        }
        Self::new(&factors)
    }
}

/// One representative of every abelian group of order `n` up to
/// isomorphism, in invariant-factor form (`f_1 | f_2 | ...`).
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    fn partitions(e: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if e == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=e.min(max)).rev() {
            prefix.push(part);
            partitions(e - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut forms: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut parts = Vec::new();
        partitions(e, e, &mut Vec::new(), &mut parts);
        let mut next = Vec::new();
        for form in &forms {
            for part in &parts {
                // both lists descending; combine position-wise
                let len = form.len().max(part.len());
                let combined: Vec<u64> = (0..len)
                    .map(|i| {
                        form.get(i).copied().unwrap_or(1) * p.pow(part.get(i).copied().unwrap_or(0))
                    })
                    .collect();
                next.push(combined);
            }
        }
        forms = next;
    }
    let mut groups: Vec<AbelianGroup> = forms
        .into_iter()
        .map(|mut f| {
            f.reverse();
            AbelianGroup::new(&f).expect("factors are at least 2")
        })
        .collect();
    groups.sort_by(|a, b| {
        a.factors
            .len()
            .cmp(&b.factors.len())
            .then(a.factors.cmp(&b.factors))
    });
    groups
}

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for AbelianGroup {}

impl std::hash::Hash for AbelianGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.factors.hash(state)
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({})", self.label())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_of_order() {
        let labels = |n| -> Vec<String> {
            abelian_groups_of_order(n)
                .iter()
                .map(|g| g.label())
                .collect()
        };
        assert_eq!(labels(1), ["Z1"]);
        assert_eq!(labels(12), ["Z12", "Z2xZ6"]);
        assert_eq!(labels(8), ["Z8", "Z2xZ4", "Z2xZ2xZ2"]);
        assert_eq!(labels(16).len(), 5);
        assert_eq!(labels(36), ["Z36", "Z2xZ18", "Z3xZ12", "Z6xZ6"]);
    }

    #[test]
    fn construction() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.order(), 6);
        let t = AbelianGroup::new(&[]).unwrap();
        assert_eq!(t.order(), 1);
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.index_of(&[1, 3]), 7);
        assert_eq!(g.coords(7), vec![1, 3]);
        assert_eq!(AbelianGroup::new(&[3, 1]), Err(Error::InvalidFactor(1)));
        assert_eq!(AbelianGroup::new(&[0]), Err(Error::InvalidFactor(0)));
    }

    #[test]
    fn addition() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.add(4, 5), 3);
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        let s = g.add(g.index_of(&[1, 3]), g.index_of(&[1, 2]));
        assert_eq!(g.coords(s), vec![0, 1]);
        for a in g.elements() {
            assert_eq!(g.add(a, 0), a);
            assert_eq!(g.add(a, g.neg(a)), 0);
        }
        assert!(matches!(z6.try_add(6, 0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn orders() {
        let z9 = AbelianGroup::new(&[9]).unwrap();
        assert_eq!(z9.element_order(3), 3);
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.element_order(5), 6);
        assert_eq!(z6.element_order(0), 1);
        assert!(z6.try_element_order(9).is_err());
    }

    #[test]
    fn literals() {
        assert_eq!(AbelianGroup::parse("Z6").unwrap().factors(), &[6]);
        assert_eq!(AbelianGroup::parse("z2xZ4").unwrap().factors(), &[2, 4]);
        assert_eq!(AbelianGroup::parse("Z3xZ3").unwrap().label(), "Z3xZ3");
        assert!(AbelianGroup::parse("Z1").unwrap().is_trivial());
        assert!(AbelianGroup::parse("Z2xZ1").is_err());
        assert!(AbelianGroup::parse("Q8").is_err());
        assert!(AbelianGroup::parse("Z").is_err());
        assert!(AbelianGroup::parse("").is_err());
        assert!(AbelianGroup::parse("Z2xZ3").unwrap().is_cyclic());
        assert!(!AbelianGroup::parse("Z2xZ2").unwrap().is_cyclic());
    }
}
