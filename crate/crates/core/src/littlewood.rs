//! Beta sets, t-cores and t-quotients, ribbon signs, and the structure of
//! z-asymmetric partitions under the Littlewood decomposition.
//!
//! Beads are the integers m = λ_i − i. Bead m sits on runner r = m mod t
//! (floored) at position p = (m − r)/t; "positive" means p ≥ 0. The charge of
//! runner r is κ_r = #(beads with p ≥ 0) − #(gaps with p < 0).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{check_modulus, Error, Result};
use crate::partition::{Partition, SkewShape};

/// The first N beads m_1 > … > m_N of a partition. Every m < −N is
/// implicitly a bead as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaEncoding {
    beads: Vec<i64>,
}

impl BetaEncoding {
    pub fn new(lambda: &Partition, window: usize) -> Result<Self> {
        if window < lambda.len() {
            return Err(Error::Window { window, len: lambda.len() });
        }
        let beads = (0..window).map(|i| lambda.part(i) as i64 - i as i64 - 1).collect();
        Ok(BetaEncoding { beads })
    }

    pub fn beads(&self) -> &[i64] {
        &self.beads
    }

    pub fn window(&self) -> usize {
        self.beads.len()
    }

    pub fn has_bead(&self, m: i64) -> bool {
        let n = self.beads.len() as i64;
        m < -n || self.beads.binary_search_by(|b| m.cmp(b)).is_ok()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_sorted(
            self.beads.iter().enumerate().map(|(i, &m)| (m + i as i64 + 1) as usize).collect(),
        )
    }
}

/// The Littlewood decomposition of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoreQuotient {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub kappa: Vec<i64>,
}

pub fn core_quotient(lambda: &Partition, t: usize) -> Result<CoreQuotient> {
    core_quotient_with_window(lambda, t, lambda.len() + t)
}

/// Same as [`core_quotient`] with an explicit bead window; the result does
/// not depend on it.
pub fn core_quotient_with_window(lambda: &Partition, t: usize, window: usize) -> Result<CoreQuotient> {
    check_modulus(t)?;
    let beta = BetaEncoding::new(lambda, window)?;
    let n = window as i64;
    let ti = t as i64;
    let top = beta.beads.first().copied().unwrap_or(-1);
    let mut kappa = Vec::with_capacity(t);
    let mut quotient = Vec::with_capacity(t);
    for r in 0..ti {
        let lo = (-n - r).div_euclid(ti) + i64::from((-n - r).rem_euclid(ti) != 0);
        let hi = (top - r).div_euclid(ti);
        let mut positions = Vec::new();
        let mut charge = 0i64;
        for p in (lo..=hi.max(lo)).rev() {
            let here = beta.has_bead(r + ti * p);
            if here {
                positions.push(p);
                if p >= 0 {
                    charge += 1;
                }
            } else if p < 0 {
                charge -= 1;
            }
        }
        let parts = positions
            .iter()
            .enumerate()
            .map(|(j, &b)| {
                let v = b - charge + j as i64 + 1;
                debug_assert!(v >= 0);
                v.max(0) as usize
            })
            .collect();
        kappa.push(charge);
        quotient.push(Partition::from_sorted(parts));
    }
    let core = assemble(&kappa, &vec![Partition::empty(); t], t);
    Ok(CoreQuotient { t, core, quotient, kappa })
}

/// Places beads for charges `kappa` and runner partitions `quotient`.
fn assemble(kappa: &[i64], quotient: &[Partition], t: usize) -> Partition {
    let ti = t as i64;
    let floor = kappa
        .iter()
        .zip(quotient)
        .map(|(&c, q)| c - q.len() as i64)
        .min()
        .unwrap_or(0)
        - 1;
    let mut beads = Vec::new();
    for (r, (&c, q)) in kappa.iter().zip(quotient).enumerate() {
        for j in 1.. {
            let p = q.part(j - 1) as i64 + c - j as i64;
            if p < floor {
                break;
            }
            beads.push(r as i64 + ti * p);
        }
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted(
        beads.iter().enumerate().map(|(i, &m)| (m + i as i64 + 1).max(0) as usize).collect(),
    )
}

pub fn t_core(lambda: &Partition, t: usize) -> Result<Partition> {
    Ok(core_quotient(lambda, t)?.core)
}

pub fn is_t_core(lambda: &Partition, t: usize) -> Result<bool> {
    Ok(core_quotient(lambda, t)?.quotient.iter().all(Partition::is_empty))
}

/// The unique t-core with charge vector `c`.
pub fn core_from_kappa(c: &[i64], t: usize) -> Result<Partition> {
    check_modulus(t)?;
    if c.len() != t {
        return Err(Error::QuotientLength { expected: t, got: c.len() });
    }
    if c.iter().sum::<i64>() != 0 {
        return Err(Error::KappaSum(c.to_vec()));
    }
    Ok(assemble(c, &vec![Partition::empty(); t], t))
}

/// Inverse of [`core_quotient`].
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], t: usize) -> Result<Partition> {
    check_modulus(t)?;
    if quotient.len() != t {
        return Err(Error::QuotientLength { expected: t, got: quotient.len() });
    }
    let cq = core_quotient(core, t)?;
    if cq.quotient.iter().any(|q| !q.is_empty()) {
        return Err(Error::NotACore { core: core.clone(), t });
    }
    Ok(assemble(&cq.kappa, quotient, t))
}

/// Cores agree and quotients are nested componentwise.
pub fn is_t_tileable(shape: &SkewShape, t: usize) -> Result<bool> {
    let a = core_quotient(&shape.outer, t)?;
    let b = core_quotient(&shape.inner, t)?;
    Ok(a.core == b.core && a.quotient.iter().zip(&b.quotient).all(|(x, y)| x.contains(y)))
}

/// Order in which [`sgn_t_with`] removes ribbons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelOrder {
    /// Lowest runner first, lowest movable bead on it.
    LowestRunner,
    /// Highest runner first, highest movable bead on it.
    HighestRunner,
}

/// sgn_t(λ/μ) as a product of (−1)^{beads jumped} over bead moves m → m − t.
pub fn sgn_t(shape: &SkewShape, t: usize) -> Result<i32> {
    sgn_t_with(shape, t, PeelOrder::LowestRunner)
}

pub fn sgn_t_with(shape: &SkewShape, t: usize, order: PeelOrder) -> Result<i32> {
    if !is_t_tileable(shape, t)? {
        return Err(Error::NotTileable {
            outer: shape.outer.clone(),
            inner: shape.inner.clone(),
            t,
        });
    }
    let window = shape.outer.len() + t;
    let ti = t as i64;
    let mut cur: BTreeSet<i64> = BetaEncoding::new(&shape.outer, window)?.beads.into_iter().collect();
    let target: BTreeSet<i64> = BetaEncoding::new(&shape.inner, window)?.beads.into_iter().collect();
    let runner = |set: &BTreeSet<i64>, r: i64| -> Vec<i64> {
        set.iter().rev().filter(|m| m.rem_euclid(ti) == r).map(|m| (m - r).div_euclid(ti)).collect()
    };
    let runners: Vec<i64> = match order {
        PeelOrder::LowestRunner => (0..ti).collect(),
        PeelOrder::HighestRunner => (0..ti).rev().collect(),
    };
    let mut sign = 1;
    while cur != target {
        let mut moved = None;
        for &r in &runners {
            let have = runner(&cur, r);
            let want = runner(&target, r);
            debug_assert_eq!(have.len(), want.len());
            let pick = match order {
                PeelOrder::LowestRunner => (0..have.len()).rev().find(|&j| have[j] > want[j]),
                PeelOrder::HighestRunner => (0..have.len())
                    .find(|&j| have[j] > want[j] && !cur.contains(&(r + ti * (have[j] - 1)))),
            };
            if let Some(j) = pick {
                moved = Some(r + ti * have[j]);
                break;
            }
        }
        let m = moved.expect("a tileable shape always admits a bead move");
        let jumped = cur.range(m - ti + 1..m).count();
        if jumped % 2 == 1 {
            sign = -sign;
        }
        cur.remove(&m);
        cur.insert(m - ti);
    }
    Ok(sign)
}

/// σ_t(λ; n) in one-line notation (1-based) together with its sign.
pub fn sigma_perm(lambda: &Partition, t: usize, n: usize) -> Result<(Vec<usize>, i32)> {
    check_modulus(t)?;
    if n < lambda.len() {
        return Err(Error::Window { window: n, len: lambda.len() });
    }
    let ti = t as i64;
    let vals: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64 - i as i64 - 1).collect();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (vals[i].rem_euclid(ti), -vals[i]));
    let perm: Vec<usize> = idx.iter().map(|i| i + 1).collect();
    Ok((perm.clone(), permutation_sign(&perm)))
}

pub fn sigma_sign(lambda: &Partition, t: usize, n: usize) -> Result<i32> {
    Ok(sigma_perm(lambda, t, n)?.1)
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        inversions += perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// sgn_t(λ/μ) through the sorting permutations, for any window n ≥ l(λ).
pub fn sgn_t_sorting(shape: &SkewShape, t: usize) -> Result<i32> {
    let n = shape.outer.len();
    Ok(sigma_sign(&shape.outer, t, n)? * sigma_sign(&shape.inner, t, n)?)
}

/// Membership of κ in the symmetry class for residue b (0 ≤ b < t):
/// κ_r + κ_{b−r−1} = 0 for r < b and κ_s + κ_{t+b−s−1} = 0 for s ≥ b.
pub fn kappa_in_class(c: &[i64], b: usize, t: usize) -> bool {
    c.len() == t
        && b < t
        && (0..b).all(|r| c[r] + c[b - r - 1] == 0)
        && (b..t).all(|s| c[s] + c[t + b - s - 1] == 0)
}

fn split_z(z: i64, t: usize) -> (i64, usize) {
    (z.div_euclid(t as i64), z.rem_euclid(t as i64) as usize)
}

fn reversed_negated(c: &[i64]) -> Vec<i64> {
    c.iter().rev().map(|x| -x).collect()
}

/// The smallest z-asymmetric partition whose t-core has charge vector `c`.
///
/// For z = at + b ≥ 0 the quotient is ((a+1)^{c_r}) at r < b and (a^{c_s}) at
/// s ≥ b wherever the charge is positive, and empty elsewhere. Negative z is
/// handled by conjugation.
pub fn minimal_z_asym(c: &[i64], z: i64, t: usize) -> Result<Partition> {
    check_modulus(t)?;
    if c.len() != t {
        return Err(Error::QuotientLength { expected: t, got: c.len() });
    }
    if c.iter().sum::<i64>() != 0 {
        return Err(Error::KappaSum(c.to_vec()));
    }
    if z < 0 {
        return Ok(minimal_z_asym(&reversed_negated(c), -z, t)?.conjugate());
    }
    let (a, b) = split_z(z, t);
    if !kappa_in_class(c, b, t) {
        return Err(Error::KappaClass { kappa: c.to_vec(), z, t });
    }
    let quotient: Vec<Partition> = c
        .iter()
        .enumerate()
        .map(|(r, &cr)| {
            let width = if r < b { a + 1 } else { a } as usize;
            if cr > 0 {
                Partition::from_sorted(vec![width; cr as usize])
            } else {
                Partition::empty()
            }
        })
        .collect();
    Ok(assemble(c, &quotient, t))
}

/// Witness partitions for a z-asymmetric λ with z = at + b.
///
/// `nu[r]` (r < b) and `xi[s − b]` (s ≥ b) are present exactly where the
/// charge is nonnegative. When `conjugated` is set the witness describes λ′
/// at −z, which is how negative z is handled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZAsymWitness {
    pub z: i64,
    pub t: usize,
    pub a: i64,
    pub b: usize,
    pub kappa: Vec<i64>,
    pub nu: Vec<Option<Partition>>,
    pub xi: Vec<Option<Partition>>,
    pub conjugated: bool,
}

impl ZAsymWitness {
    /// Rebuilds the partition from the witness data.
    pub fn reconstruct(&self) -> Result<Partition> {
        let t = self.t;
        let mut quotient: Vec<Option<Partition>> = vec![None; t];
        let mut place = |idx: usize, p: Partition| -> Result<()> {
            match &quotient[idx] {
                Some(q) if *q != p => Err(Error::Invalid(format!(
                    "witness gives runner {idx} both {q} and {p}"
                ))),
                _ => {
                    quotient[idx] = Some(p);
                    Ok(())
                }
            }
        };
        let folds = self
            .nu
            .iter()
            .enumerate()
            .map(|(r, v)| (r, self.b - r - 1, self.a + 1, v))
            .chain(self.xi.iter().enumerate().map(|(i, v)| {
                let s = self.b + i;
                (s, t + self.b - s - 1, self.a, v)
            }));
        for (r, partner, width, v) in folds {
            let Some(v) = v else { continue };
            let c = self.kappa[r];
            let k = v.shifted_rank(c);
            let bad = || Error::Invalid(format!("witness entry {v} does not fold"));
            place(r, v.add_rectangle(width, c as usize + k).ok_or_else(bad)?)?;
            place(partner, v.conjugate().add_rectangle(width, k).ok_or_else(bad)?)?;
        }
        let quotient: Vec<Partition> = quotient.into_iter().map(Option::unwrap_or_default).collect();
        let lambda = from_core_quotient(&core_from_kappa(&self.kappa, t)?, &quotient, t)?;
        Ok(if self.conjugated { lambda.conjugate() } else { lambda })
    }
}

/// Extracts the folding witness of a z-asymmetric partition; `None` when λ is
/// not z-asymmetric. Fails loudly if λ is z-asymmetric but no witness fits.
pub fn zasym_witness(lambda: &Partition, z: i64, t: usize) -> Result<Option<ZAsymWitness>> {
    check_modulus(t)?;
    if z < 0 {
        return Ok(zasym_witness(&lambda.conjugate(), -z, t)?.map(|mut w| {
            w.conjugated = true;
            w
        }));
    }
    if !lambda.is_z_asymmetric(z) {
        return Ok(None);
    }
    let fail = || Error::Witness { partition: lambda.clone(), z, t };
    let cq = core_quotient(lambda, t)?;
    let (a, b) = split_z(z, t);
    if !kappa_in_class(&cq.kappa, b, t) {
        return Err(fail());
    }
    let unfold = |r: usize, partner: usize, width: i64| -> Result<Option<Partition>> {
        let c = cq.kappa[r];
        if c < 0 {
            return Ok(None);
        }
        let here = &cq.quotient[r];
        for k in 0..=here.len() {
            let Some(v) = here.add_rectangle(-width, c as usize + k) else { continue };
            if v.shifted_rank(c) == k
                && v.conjugate().add_rectangle(width, k).as_ref() == Some(&cq.quotient[partner])
            {
                return Ok(Some(v));
            }
        }
        Err(fail())
    };
    let nu = (0..b).map(|r| unfold(r, b - r - 1, a + 1)).collect::<Result<Vec<_>>>()?;
    let xi = (b..t).map(|s| unfold(s, t + b - s - 1, a)).collect::<Result<Vec<_>>>()?;
    Ok(Some(ZAsymWitness { z, t, a, b, kappa: cq.kappa, nu, xi, conjugated: false }))
}

/// rk(λ) = rk(core) + Σ_r rk_{κ_r}(λ^(r)).
pub fn rank_decomposition_check(lambda: &Partition, t: usize) -> Result<bool> {
    let cq = core_quotient(lambda, t)?;
    let rhs: usize = cq.core.rank()
        + cq.quotient.iter().zip(&cq.kappa).map(|(q, &c)| q.shifted_rank(c)).sum::<usize>();
    Ok(lambda.rank() == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew(a: &str, b: &str) -> SkewShape {
        SkewShape::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let cq = core_quotient(&p("6,5,5,1"), 3).unwrap();
        assert_eq!(cq.core, p("1,1"));
        assert_eq!(cq.quotient, vec![p("1"), p("-"), p("2,2")]);
        assert_eq!(cq.kappa, vec![1, -1, 0]);

        let cq = core_quotient(&p("8,4,3,3,3,1,1"), 3).unwrap();
        assert_eq!(cq.kappa, vec![0, 1, -1]);
        assert_eq!(cq.core, p("2"));
        assert_eq!(cq.quotient, vec![p("1"), p("2"), p("2,2")]);

        let cq = core_quotient(&p("-"), 4).unwrap();
        assert_eq!(cq.kappa, vec![0; 4]);
        assert!(cq.core.is_empty() && cq.quotient.iter().all(Partition::is_empty));
        assert!(core_quotient(&p("1"), 1).is_err());
    }

    #[test]
    fn inverse_examples() {
        let q = [p("1"), p("-"), p("2,2")];
        assert_eq!(from_core_quotient(&p("1,1"), &q, 3).unwrap(), p("6,5,5,1"));
        let q = [p("1"), p("2"), p("2,2")];
        assert_eq!(from_core_quotient(&p("2"), &q, 3).unwrap(), p("8,4,3,3,3,1,1"));
        let e = vec![p("-"); 3];
        assert!(from_core_quotient(&p("3"), &e, 3).is_err());
        assert_eq!(core_from_kappa(&[1, -1, 0], 3).unwrap(), p("1,1"));
        assert!(core_from_kappa(&[1, 0, 0], 3).is_err());
    }

    #[test]
    fn signs() {
        let s = |a: &str, b: &str, t| sgn_t(&skew(a, b), t).unwrap();
        assert_eq!(s("1,1", "-", 2), -1);
        assert_eq!(s("2,2", "-", 2), 1);
        assert_eq!(s("4,2,2", "-", 2), 1);
        assert!(sgn_t(&skew("1", "-"), 2).is_err());
        let (perm, _) = sigma_perm(&p("6,5,5,1"), 3, 6).unwrap();
        assert_eq!(perm, vec![2, 4, 6, 5, 1, 3]);
        assert!(sigma_perm(&p("1,1,1"), 2, 2).is_err());
    }

    #[test]
    fn tileable_examples() {
        assert!(is_t_tileable(&skew("6,5,5,1", "4,4,2,1"), 3).unwrap());
        assert!(is_t_tileable(&skew("6,5,5,1", "4,4,2,1"), 6).unwrap());
        assert!(is_t_tileable(&skew("3,2", "3,2"), 5).unwrap());
        assert!(!is_t_tileable(&skew("1", "-"), 2).unwrap());
    }

    #[test]
    fn figure_five_witness() {
        let lam = Partition::from_frobenius(&crate::partition::FrobeniusCoords {
            arms: vec![20, 15, 13, 12, 9, 8, 6, 5],
            legs: vec![15, 10, 8, 7, 4, 3, 1, 0],
        })
        .unwrap();
        let w = zasym_witness(&lam, 5, 5).unwrap().unwrap();
        assert_eq!(w.kappa, vec![2, -1, 0, 1, -2]);
        assert_eq!((w.a, w.b), (1, 0));
        assert_eq!(w.reconstruct().unwrap(), lam);
        assert!(rank_decomposition_check(&lam, 5).unwrap());
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_z_asym(&[0, 0, 0], 1, 3).unwrap(), p("-"));
        let m = minimal_z_asym(&[1, -1, 0], 2, 3).unwrap();
        assert!(m.is_z_asymmetric(2));
        assert_eq!(core_quotient(&m, 3).unwrap().kappa, vec![1, -1, 0]);
        assert!(minimal_z_asym(&[1, -1, 0], 0, 3).is_err());
    }

    #[test]
    fn rank_lemma_figure_four() {
        assert!(rank_decomposition_check(&p("8,4,3,3,3,1,1"), 3).unwrap());
    }
}
