use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::lcm;

/// A permutation of the element indices `0..n`; `table[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupPermutation {
    table: Vec<usize>,
}

impl GroupPermutation {
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        let mut seen = vec![false; n];
        for &x in &table {
            if x >= n || seen[x] {
                return Err(Error::NotBijective { len: n, order: n });
            }
            seen[x] = true;
        }
        Ok(GroupPermutation { table })
    }

    pub(crate) fn from_table_unchecked(table: Vec<usize>) -> Self {
        debug_assert!(GroupPermutation::new(table.clone()).is_ok());
        GroupPermutation { table }
    }

    pub fn identity(n: usize) -> Self {
        GroupPermutation {
            table: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn into_table(self) -> Vec<usize> {
        self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupPermutation) -> GroupPermutation {
        assert_eq!(self.len(), other.len());
        GroupPermutation {
            table: other.table.iter().map(|&x| self.table[x]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupPermutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.table.iter().enumerate() {
            inv[x] = i;
        }
        GroupPermutation { table: inv }
    }

    /// `self^k`; negative exponents go through the inverse.
    pub fn power(&self, k: i64) -> GroupPermutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GroupPermutation::identity(self.len());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles, each starting at its smallest point; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.table[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Build from disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut t: Vec<usize> = (0..n).collect();
        for c in cycles {
            for i in 0..c.len() {
                if c[i] >= n {
                    return Err(Error::NotBijective { len: n, order: n });
                }
                t[c[i]] = c[(i + 1) % c.len()];
            }
        }
        GroupPermutation::new(t)
    }
}

pub fn perm_power(p: &GroupPermutation, k: i64) -> GroupPermutation {
    p.power(k)
}

pub fn perm_order(p: &GroupPermutation) -> u64 {
    p.order()
}
