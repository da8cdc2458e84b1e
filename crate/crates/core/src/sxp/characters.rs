//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::symfunc::check_degree;

/// χ^λ(μ) for all λ, μ ⊢ n. Partitions are listed in reverse lexicographic
/// order, so `(n)` comes first.
#[derive(Debug)]
pub struct CharValueTable {
    pub n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharValueTable {
    fn build(n: usize) -> Self {
        let partitions = Partition::all(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| partitions.iter().map(|mu| mn(lam, mu.parts(), &mut memo)).collect())
            .collect();
        CharValueTable { n, partitions, index, values }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// χ^λ(μ); panics if either is not a partition of n.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    /// The row (χ^λ(μ))_μ in the order of [`partitions`](Self::partitions).
    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }

    pub fn by_index(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }
}

fn tables() -> &'static RwLock<HashMap<usize, Arc<CharValueTable>>> {
    static T: OnceLock<RwLock<HashMap<usize, Arc<CharValueTable>>>> = OnceLock::new();
    T.get_or_init(Default::default)
}

/// The memoized character table of S_n, subject to the degree cap.
pub fn char_table(n: usize) -> Result<Arc<CharValueTable>> {
    check_degree(n)?;
    if let Some(t) = tables().read().expect("table lock").get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(CharValueTable::build(n));
    let mut w = tables().write().expect("table lock");
    Ok(w.entry(n).or_insert(built).clone())
}

pub fn chi(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(char_table(lambda.size())?.value(lambda, mu))
}

/// Skew character χ^{λ/μ}(ρ): remove ribbons of the sizes in ρ from λ while
/// staying above μ.
pub fn chi_skew(shape: &SkewShape, rho: &Partition) -> Result<i64> {
    if shape.size() != rho.size() {
        return Err(Error::SizeMismatch { left: shape.size(), right: rho.size() });
    }
    check_degree(shape.size())?;
    let mut memo = HashMap::new();
    Ok(mn_skew(&shape.outer, &shape.inner, rho.parts(), &mut memo))
}

/// Every way of removing a k-ribbon from λ: (λ − R, (−1)^{ht R}).
pub(crate) fn remove_ribbons(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let n = lambda.len();
    let beads: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64 - i as i64 - 1).collect();
    let floor = -(n as i64);
    let k = k as i64;
    let mut out = Vec::new();
    for (i, &m) in beads.iter().enumerate() {
        let target = m - k;
        if target < floor || beads.binary_search_by(|b| target.cmp(b)).is_ok() {
            continue;
        }
        let jumped = beads[i + 1..].iter().take_while(|&&b| b > target).count();
        let mut moved = beads.clone();
        moved.remove(i);
        let pos = moved.iter().position(|&b| b < target).unwrap_or(moved.len());
        moved.insert(pos, target);
        let parts = moved.iter().enumerate().map(|(j, &b)| (b + j as i64 + 1) as usize).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_sorted(parts), sign));
    }
    out
}

fn mn(lambda: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_ribbons(lambda, mu[0])
        .into_iter()
        .map(|(rest, s)| s * mn(&rest, &mu[1..], memo))
        .sum();
    memo.insert(key, v);
    v
}

fn mn_skew(
    outer: &Partition,
    inner: &Partition,
    rho: &[usize],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    if rho.is_empty() {
        return i64::from(outer == inner);
    }
    let key = (outer.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_ribbons(outer, rho[0])
        .into_iter()
        .filter(|(rest, _)| rest.contains(inner))
        .map(|(rest, s)| s * mn_skew(&rest, inner, &rho[1..], memo))
        .sum();
    memo.insert(key, v);
    v
}
