//! Memoized change-of-basis tables. Everything funnels through the power sums.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::partition::Partition;
use crate::qpoly::{rat, Rational};
use crate::sxp::characters::char_table;

pub(crate) type RatComb = BTreeMap<Partition, Rational>;

type Cache<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

pub(crate) fn cached<K, V>(cell: &'static Cache<K, V>, key: &K, build: impl FnOnce() -> V) -> Arc<V>
where
    K: Hash + Eq + Clone,
{
    let lock = cell.get_or_init(Default::default);
    if let Some(v) = lock.read().expect("memo lock").get(key) {
        return v.clone();
    }
    let v = Arc::new(build());
    lock.write().expect("memo lock").entry(key.clone()).or_insert(v).clone()
}

/// z_λ = Π_i i^{m_i} m_i!.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// ε_λ = (−1)^{|λ| − l(λ)}, the eigenvalue of ω on p_λ.
pub(crate) fn omega_sign(lambda: &Partition) -> i64 {
    if (lambda.size() - lambda.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn add_to(map: &mut RatComb, k: Partition, v: Rational) {
    if v.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(v);
        }
    }
}

/// Product of two combinations in a multiplicative basis.
pub(crate) fn mul_comb(a: &RatComb, b: &RatComb) -> RatComb {
    let mut out = RatComb::new();
    for (x, u) in a {
        for (y, v) in b {
            add_to(&mut out, x.union(y), u * v);
        }
    }
    out
}

fn product_of_parts(lambda: &Partition, single: impl Fn(usize) -> Arc<RatComb>) -> RatComb {
    let mut acc = RatComb::new();
    acc.insert(Partition::empty(), Rational::one());
    for &k in lambda.parts() {
        acc = mul_comb(&acc, &single(k));
    }
    acc
}

/// h_k = Σ_{μ ⊢ k} p_μ / z_μ.
fn hk_in_p(k: usize) -> Arc<RatComb> {
    static C: Cache<usize, RatComb> = OnceLock::new();
    cached(&C, &k, || {
        Partition::all(k)
            .into_iter()
            .map(|mu| {
                let z = Rational::from_integer(z_lambda(&mu));
                (mu, Rational::one() / z)
            })
            .collect()
    })
}

pub(crate) fn h_in_p(lambda: &Partition) -> Arc<RatComb> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    cached(&C, lambda, || product_of_parts(lambda, hk_in_p))
}

/// Newton: p_k = k h_k − Σ_{i<k} h_{k−i} p_i, expanded in the h basis.
fn pk_in_h(k: usize) -> Arc<RatComb> {
    static C: Cache<usize, RatComb> = OnceLock::new();
    cached(&C, &k, || {
        let mut out = RatComb::new();
        add_to(&mut out, Partition::from_sorted(vec![k]), rat(k as i64));
        for i in 1..k {
            let hk = Partition::from_sorted(vec![k - i]);
            for (mu, c) in pk_in_h(i).iter() {
                add_to(&mut out, mu.union(&hk), -c.clone());
            }
        }
        out
    })
}

pub(crate) fn p_in_h(mu: &Partition) -> Arc<RatComb> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    cached(&C, mu, || product_of_parts(mu, pk_in_h))
}

/// m_λ = Σ_μ ⟨m_λ, p_μ⟩ p_μ / z_μ, where ⟨m_λ, p_μ⟩ is the h_λ-coefficient of p_μ.
pub(crate) fn m_in_p(lambda: &Partition) -> Arc<RatComb> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    cached(&C, lambda, || {
        let mut out = RatComb::new();
        for mu in Partition::all(lambda.size()) {
            if let Some(c) = p_in_h(&mu).get(lambda) {
                let z = Rational::from_integer(z_lambda(&mu));
                add_to(&mut out, mu, c / z);
            }
        }
        out
    })
}

/// p_μ = Σ_λ ⟨p_μ, h_λ⟩ m_λ, with ⟨p_μ, h_λ⟩ = z_μ · [p_μ] h_λ.
pub(crate) fn p_in_m(mu: &Partition) -> Arc<RatComb> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    cached(&C, mu, || {
        let z = Rational::from_integer(z_lambda(mu));
        let mut out = RatComb::new();
        for lambda in Partition::all(mu.size()) {
            if let Some(c) = h_in_p(&lambda).get(mu) {
                add_to(&mut out, lambda, c * &z);
            }
        }
        out
    })
}

/// s_λ = Σ_μ χ^λ(μ) p_μ / z_μ.
pub(crate) fn s_in_p(lambda: &Partition) -> Result<Arc<RatComb>> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    let table = char_table(lambda.size())?;
    Ok(cached(&C, lambda, || {
        table
            .partitions()
            .iter()
            .zip(table.row(lambda))
            .filter(|(_, &x)| x != 0)
            .map(|(mu, &x)| (mu.clone(), rat(x) / Rational::from_integer(z_lambda(mu))))
            .collect()
    }))
}

/// p_μ = Σ_λ χ^λ(μ) s_λ.
pub(crate) fn p_in_s(mu: &Partition) -> Result<Arc<RatComb>> {
    static C: Cache<Partition, RatComb> = OnceLock::new();
    let table = char_table(mu.size())?;
    Ok(cached(&C, mu, || {
        table
            .partitions()
            .iter()
            .map(|lam| (lam.clone(), table.value(lam, mu)))
            .filter(|(_, x)| *x != 0)
            .map(|(lam, x)| (lam, rat(x)))
            .collect()
    }))
}
