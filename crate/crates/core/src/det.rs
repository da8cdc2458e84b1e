//! Linear combinations over multiplicative bases and fraction-free
//! determinants with entries in them.
//!
//! In the h, e and p bases a product of basis elements is again a basis
//! element (concatenate the index partitions), so a determinant whose entries
//! live there can be expanded with no division at all.

use std::collections::{BTreeMap, HashMap};

use crate::partition::Partition;
use crate::qpoly::QPoly;

/// Keys that multiply by concatenation.
pub(crate) trait MonoKey: Ord + Clone {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl MonoKey for Partition {
    fn unit() -> Self {
        Partition::empty()
    }
    fn times(&self, other: &Self) -> Self {
        self.union(other)
    }
}

impl MonoKey for (Partition, Partition) {
    fn unit() -> Self {
        (Partition::empty(), Partition::empty())
    }
    fn times(&self, other: &Self) -> Self {
        (self.0.union(&other.0), self.1.union(&other.1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LinComb<K: Ord>(pub BTreeMap<K, QPoly>);

impl<K: MonoKey> LinComb<K> {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::term(K::unit(), QPoly::one())
    }

    pub fn term(k: K, c: QPoly) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        LinComb(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, k: K, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.0.remove(&k);
                }
            }
            None => {
                self.0.insert(k, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.0 {
            self.add_term(k.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.0 {
            self.add_term(k.clone(), &-c);
        }
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                out.add_term(a.times(b), &(x * y));
            }
        }
        out
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns already used. Entries that are zero are skipped, so banded
/// Jacobi–Trudi matrices stay cheap.
pub(crate) fn determinant<K: MonoKey>(m: &[Vec<LinComb<K>>]) -> LinComb<K> {
    let n = m.len();
    assert!(n <= 63, "determinant too large");
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut layer: HashMap<u64, LinComb<K>> = HashMap::new();
    layer.insert(0, LinComb::one());
    for row in m {
        let mut next: HashMap<u64, LinComb<K>> = HashMap::new();
        for (mask, val) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask >> j & 1 == 1 || entry.is_zero() {
                    continue;
                }
                let prod = val.mul(entry);
                let slot = next.entry(mask | 1 << j).or_insert_with(LinComb::zero);
                // Columns to the right of j already used count the inversions.
                if (mask >> (j + 1)).count_ones() % 2 == 0 {
                    slot.add_assign(&prod);
                } else {
                    slot.sub_assign(&prod);
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    layer.remove(&((1u64 << n) - 1)).unwrap_or_else(LinComb::zero)
}
