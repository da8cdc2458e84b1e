//! Plethysm by power sums: the SXP rule and its skew extension, the
//! character identities behind them, and the expansions of universal
//! characters composed with p_t.

pub mod characters;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_modulus, Error, Result};
use crate::littlewood::{core_quotient, from_core_quotient, is_t_tileable, sgn_t};
use crate::partition::{Partition, SkewShape};
use crate::qpoly::QPoly;
use crate::symfunc::{lr_coeff, schur_product, Basis, SymFunc};
use crate::universal::{schur_in_universal, universal_char, Family};

use characters::chi;

/// One term sgn · coeff · s_ν of an SXP expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SxpTerm {
    pub nu: Partition,
    pub sign: i32,
    pub coeff: u64,
}

impl SxpTerm {
    pub fn value(&self) -> i64 {
        self.sign as i64 * self.coeff as i64
    }
}

/// All t-tuples (α_0, …, α_{t−1}) with α_r ⊇ inner[r] and Σ|α_r/inner_r| = extra.
fn tuples_over(inner: &[Partition], extra: usize) -> Vec<Vec<Partition>> {
    fn go(inner: &[Partition], extra: usize, acc: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        let Some((first, rest)) = inner.split_first() else {
            if extra == 0 {
                out.push(acc.clone());
            }
            return;
        };
        let lo = if rest.is_empty() { extra } else { 0 };
        for k in lo..=extra {
            for alpha in Partition::all(first.size() + k) {
                if alpha.contains(first) {
                    acc.push(alpha);
                    go(rest, extra - k, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(inner, extra, &mut Vec::new(), &mut out);
    out
}

/// Partitions of size t·m with empty t-core, paired with their quotients.
fn empty_core_of_weight(m: usize, t: usize) -> Result<Vec<(Partition, Vec<Partition>)>> {
    let empty = vec![Partition::empty(); t];
    tuples_over(&empty, m)
        .into_iter()
        .map(|q| Ok((from_core_quotient(&Partition::empty(), &q, t)?, q)))
        .collect()
}

/// s_λ ∘ p_t = Σ_ν sgn_t(ν) c^λ_{ν^(0),…,ν^(t−1)} s_ν over ν with empty t-core.
pub fn sxp_schur(lambda: &Partition, t: usize) -> Result<Vec<SxpTerm>> {
    check_modulus(t)?;
    let mut out = Vec::new();
    for (nu, quo) in empty_core_of_weight(lambda.size(), t)? {
        let shapes: Vec<_> = quo.into_iter().map(SkewShape::straight).collect();
        let coeff = lr_coeff(lambda, &shapes)?;
        if coeff != 0 {
            let sign = sgn_t(&SkewShape::straight(nu.clone()), t)?;
            out.push(SxpTerm { nu, sign, coeff });
        }
    }
    out.sort_by(|a, b| b.nu.cmp(&a.nu));
    Ok(out)
}

/// Schur coefficients of s_τ · (s_{λ/μ} ∘ p_t): ν runs over shapes with ν/τ
/// t-tileable, weighted by sgn_t(ν/τ) c^λ_{ν^(0)/τ^(0),…,μ}.
pub fn sxp_wildon(tau: &Partition, shape: &SkewShape, t: usize) -> Result<BTreeMap<Partition, i64>> {
    let cq = core_quotient(tau, t)?;
    let inner = SkewShape::straight(shape.inner.clone());
    let mut out = BTreeMap::new();
    for quo in tuples_over(&cq.quotient, shape.size()) {
        let nu = from_core_quotient(&cq.core, &quo, t)?;
        let mut factors: Vec<SkewShape> = quo
            .into_iter()
            .zip(&cq.quotient)
            .map(|(a, b)| SkewShape::new(a, b.clone()))
            .collect::<Result<_>>()?;
        factors.push(inner.clone());
        let c = lr_coeff(&shape.outer, &factors)?;
        if c != 0 {
            let skew = SkewShape::new(nu.clone(), tau.clone())?;
            debug_assert!(is_t_tileable(&skew, t)?);
            out.insert(nu, sgn_t(&skew, t)? as i64 * c as i64);
        }
    }
    Ok(out)
}

/// χ^λ(tμ) and sgn_t(λ) Σ_ν c^ν_{λ^(0),…,λ^(t−1)} χ^ν(μ), the latter being
/// zero when λ has a nonempty t-core.
pub fn littlewood_mult_sides(lambda: &Partition, mu: &Partition, t: usize) -> Result<(i64, i64)> {
    check_modulus(t)?;
    if lambda.size() != t * mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: t * mu.size() });
    }
    let lhs = chi(lambda, &mu.scale(t))?;
    let cq = core_quotient(lambda, t)?;
    if !cq.core.is_empty() {
        return Ok((lhs, 0));
    }
    let sign = sgn_t(&SkewShape::straight(lambda.clone()), t)? as i64;
    Ok((lhs, sign * induced_value(&cq.quotient, mu)?))
}

pub fn littlewood_mult_check(lambda: &Partition, mu: &Partition, t: usize) -> Result<bool> {
    let (l, r) = littlewood_mult_sides(lambda, mu, t)?;
    Ok(l == r)
}

/// Σ_ν c^ν_{α…} χ^ν(ρ), the induced character at ρ.
fn induced_value(parts: &[Partition], rho: &Partition) -> Result<i64> {
    let prod = schur_product(parts)?;
    let mut acc = 0i64;
    for (nu, c) in prod.terms() {
        acc += as_int(c)? * chi(nu, rho)?;
    }
    Ok(acc)
}

/// Both sides of χ^{λ/μ}(tρ) = sgn_t(λ/μ) Σ_ν c^ν_{λ^(r)/μ^(r)} χ^ν(ρ), with the
/// right side zero for shapes that are not t-tileable.
pub fn farahat_sides(shape: &SkewShape, rho: &Partition, t: usize) -> Result<(i64, i64)> {
    check_modulus(t)?;
    if shape.size() != t * rho.size() {
        return Err(Error::SizeMismatch { left: shape.size(), right: t * rho.size() });
    }
    let lhs = characters::chi_skew(shape, &rho.scale(t))?;
    if !is_t_tileable(shape, t)? {
        return Ok((lhs, 0));
    }
    let a = core_quotient(&shape.outer, t)?;
    let b = core_quotient(&shape.inner, t)?;
    let pairs: Vec<_> = a
        .quotient
        .into_iter()
        .zip(b.quotient)
        .map(|(x, y)| SkewShape::new(x, y))
        .collect::<Result<_>>()?;
    let mut prod = SymFunc::one(Basis::S);
    for s in &pairs {
        prod = prod.mul(&crate::symfunc::skew_schur(s)?)?;
    }
    let prod = prod.to_basis(Basis::S)?;
    let mut acc = 0i64;
    for (nu, c) in prod.terms() {
        acc += as_int(c)? * chi(nu, rho)?;
    }
    Ok((lhs, sgn_t(shape, t)? as i64 * acc))
}

fn as_int(c: &QPoly) -> Result<i64> {
    let v = c.coeff(0);
    if c.degree().unwrap_or(0) > 0 || !v.is_integer() {
        return Err(Error::Invalid(format!("expected an integer coefficient, got {c}")));
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::Invalid("coefficient overflow".into()))
}

fn check_sxp_family(family: Family) -> Result<()> {
    if family == Family::SoMinus {
        return Err(Error::Invalid("SXP coefficients are defined for sp, o and so+".into()));
    }
    Ok(())
}

/// Expands f in the universal characters of `family`, peeling off the top
/// degree each round (u_ν = s_ν + lower terms).
pub fn expand_in_universal(f: &SymFunc, family: Family) -> Result<BTreeMap<Partition, i64>> {
    let mut rest = f.to_basis(Basis::S)?;
    let mut out = BTreeMap::new();
    while let Some(d) = rest.max_degree() {
        let top = rest.degree_part(d);
        let (nu, c) = top.terms().iter().next().expect("nonempty degree part");
        let (nu, c) = (nu.clone(), c.clone());
        out.insert(nu.clone(), as_int(&c)?);
        rest = rest.sub(&universal_char(family, &nu)?.scale(&c))?;
    }
    Ok(out)
}

/// a_{λ,ν}(t) for every ν, by elimination of u_λ ∘ p_t.
pub fn a_coeffs_elimination(lambda: &Partition, family: Family, t: usize) -> Result<BTreeMap<Partition, i64>> {
    check_modulus(t)?;
    check_sxp_family(family)?;
    expand_in_universal(&universal_char(family, lambda)?.plethysm_pt(t)?, family)
}

/// a_{λ,ν}(t) for every ν, by the triple sum: skew expansion of u_λ, the
/// skew SXP rule on each s_{λ/μ}, then each s_ξ back into universal characters.
pub fn a_coeffs_formula(lambda: &Partition, family: Family, t: usize) -> Result<BTreeMap<Partition, i64>> {
    check_modulus(t)?;
    check_sxp_family(family)?;
    let z = family.skew_z();
    let mut by_xi: BTreeMap<Partition, i64> = BTreeMap::new();
    for mu in lambda.subpartitions() {
        if !mu.is_z_asymmetric(z) {
            continue;
        }
        let s = family.skew_sign(&mu);
        let shape = SkewShape::new(lambda.clone(), mu)?;
        for (xi, c) in sxp_wildon(&Partition::empty(), &shape, t)? {
            *by_xi.entry(xi).or_default() += s * c;
        }
    }
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for (xi, c) in by_xi.into_iter().filter(|(_, c)| *c != 0) {
        for (nu, d) in schur_in_universal(&xi, family)? {
            *out.entry(nu).or_default() += c * d;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// a_{λ,ν}(t), computed both ways; disagreement is an error.
pub fn a_coeff(lambda: &Partition, nu: &Partition, family: Family, t: usize) -> Result<i64> {
    let x = a_coeffs_formula(lambda, family, t)?.get(nu).copied().unwrap_or(0);
    let y = a_coeffs_elimination(lambda, family, t)?.get(nu).copied().unwrap_or(0);
    if x != y {
        return Err(Error::Invalid(format!("a-coefficient paths disagree for {lambda}, {nu}: {x} vs {y}")));
    }
    Ok(x)
}

/// Stable branching coefficient b_{λ,μ}(t). Zero unless μ has empty t-core;
/// otherwise Σ c^λ over η-lists made of one free η plus t/2 − 1 repeated
/// pairs (t even) or (t − 1)/2 repeated pairs (t odd), together with the
/// t-quotient of μ.
pub fn b_coeff(lambda: &Partition, mu: &Partition, t: usize) -> Result<u64> {
    let cq = core_quotient(mu, t)?;
    if !cq.core.is_empty() {
        return Ok(0);
    }
    let used: usize = cq.quotient.iter().map(Partition::size).sum();
    if used > lambda.size() {
        return Ok(0);
    }
    let free = usize::from(t % 2 == 0);
    let pairs = (t - 1) / 2;
    let mut total = 0u64;
    let mut list: Vec<SkewShape> = cq.quotient.into_iter().map(SkewShape::straight).collect();
    b_sum(lambda, lambda.size() - used, free, pairs, &mut list, &mut total)?;
    Ok(total)
}

fn b_sum(
    lambda: &Partition,
    room: usize,
    free: usize,
    pairs: usize,
    list: &mut Vec<SkewShape>,
    total: &mut u64,
) -> Result<()> {
    if pairs > 0 {
        for k in 0..=room / 2 {
            for eta in Partition::contained_of_size(lambda, k) {
                list.push(SkewShape::straight(eta.clone()));
                list.push(SkewShape::straight(eta));
                b_sum(lambda, room - 2 * k, free, pairs - 1, list, total)?;
                list.truncate(list.len() - 2);
            }
        }
        return Ok(());
    }
    if free == 0 {
        if room == 0 {
            *total += lr_coeff(lambda, list)?;
        }
        return Ok(());
    }
    for eta in Partition::contained_of_size(lambda, room) {
        list.push(SkewShape::straight(eta));
        *total += lr_coeff(lambda, list)?;
        list.pop();
    }
    Ok(())
}

/// so⁺_λ ∘ p_t = Σ_μ sgn_t(μ) b_{λ,μ}(t) so⁺_μ, as terms indexed by μ.
pub fn sxp_universal_so(lambda: &Partition, t: usize) -> Result<Vec<SxpTerm>> {
    check_modulus(t)?;
    let mut out = Vec::new();
    for m in (0..=lambda.size()).rev() {
        for (mu, _) in empty_core_of_weight(m, t)? {
            let coeff = b_coeff(lambda, &mu, t)?;
            if coeff != 0 {
                let sign = sgn_t(&SkewShape::straight(mu.clone()), t)?;
                out.push(SxpTerm { nu: mu, sign, coeff });
            }
        }
    }
    Ok(out)
}

/// Output of the odd-orthogonal Levi construction: one weight per factor and
/// the sizes of the factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoConstruction {
    pub weights: Vec<Vec<i64>>,
    pub gl_sizes: Vec<usize>,
    /// n' for a trailing SO_{2n'+1}, present when t is odd.
    pub so_rank: Option<usize>,
}

impl SoConstruction {
    pub fn group(&self) -> String {
        let mut parts: Vec<String> = self.gl_sizes.iter().map(|m| format!("GL{m}")).collect();
        if let Some(k) = self.so_rank {
            parts.push(format!("SO{}", 2 * k + 1));
        }
        parts.join(" x ")
    }
}

/// [α, β]_m = (α_1, …, α_k, 0, …, 0, −β_l, …, −β_1) of length m.
fn gl_weight(alpha: &Partition, beta: &Partition, m: usize) -> Result<Vec<i64>> {
    if alpha.len() + beta.len() > m {
        return Err(Error::Invalid(format!("[{alpha}, {beta}] does not fit GL{m}")));
    }
    let mut w = vec![0i64; m];
    for (i, &a) in alpha.parts().iter().enumerate() {
        w[i] = a as i64;
    }
    for (j, &b) in beta.parts().iter().enumerate() {
        w[m - 1 - j] = -(b as i64);
    }
    Ok(w)
}

/// The weight γ_n(λ;t) of the Levi subgroup attached to λ, with n = at + b.
/// Runner indices are read mod t; the GL weights are shifted by the charge
/// c_{r−b} of the second runner in each pair.
pub fn construction_so(lambda: &Partition, n: usize, t: usize) -> Result<SoConstruction> {
    check_modulus(t)?;
    if lambda.len() > n {
        return Err(Error::Invalid(format!("{lambda} has more than {n} parts")));
    }
    let cq = core_quotient(lambda, t)?;
    let (a, b) = (n / t, n % t);
    let ti = t as i64;
    let idx = |r: i64| r.rem_euclid(ti) as usize;
    let mut weights = Vec::new();
    let mut gl_sizes = Vec::new();
    for r in 0..(t / 2) {
        let d = usize::from(r < b) + usize::from(t - 1 - r < b);
        let m = 2 * a + d;
        let (ri, bi) = (r as i64, b as i64);
        let left = &cq.quotient[idx(-ri - bi - 1)];
        let right = &cq.quotient[idx(ri - bi)];
        let shift = cq.kappa[idx(ri - bi)];
        let w = gl_weight(left, right, m)?.into_iter().map(|x| x + shift).collect();
        weights.push(w);
        gl_sizes.push(m);
    }
    let so_rank = if t % 2 == 1 {
        let mid = (t - 1) / 2;
        let k = a + usize::from(b > mid);
        let g = &cq.quotient[idx(mid as i64 - b as i64)];
        if g.len() > k {
            return Err(Error::Invalid(format!("{g} does not fit SO{}", 2 * k + 1)));
        }
        weights.push(g.parts().iter().map(|&x| x as i64).collect());
        Some(k)
    } else {
        None
    };
    Ok(SoConstruction { weights, gl_sizes, so_rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::skew_schur;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn terms_as_s(terms: &[SxpTerm]) -> SymFunc {
        SymFunc::from_terms(Basis::S, terms.iter().map(|x| (x.nu.clone(), QPoly::int(x.value()))))
    }

    #[test]
    fn sxp_small_cases() {
        let got = sxp_schur(&p("1"), 2).unwrap();
        assert_eq!(
            got,
            vec![SxpTerm { nu: p("2"), sign: 1, coeff: 1 }, SxpTerm { nu: p("1,1"), sign: -1, coeff: 1 }]
        );
        let got = sxp_schur(&p("1"), 3).unwrap();
        let vals: Vec<_> = got.iter().map(|x| (x.nu.to_string(), x.value())).collect();
        assert_eq!(vals.len(), 3);
        assert!(vals.contains(&(p("2,1").to_string(), -1)));
        assert!(vals.contains(&(p("1,1,1").to_string(), 1)));
    }

    #[test]
    fn sxp_matches_power_sum_plethysm() {
        for t in 2..=3 {
            for n in 0..=3 {
                for lam in Partition::all(n) {
                    let want = SymFunc::generator(Basis::S, lam.clone()).plethysm_pt(t).unwrap();
                    assert_eq!(terms_as_s(&sxp_schur(&lam, t).unwrap()), want, "{lam} t={t}");
                }
            }
        }
    }

    #[test]
    fn wildon_with_tau() {
        let tau = p("1");
        let shape = SkewShape::new(p("2,1"), p("1")).unwrap();
        let got = sxp_wildon(&tau, &shape, 2).unwrap();
        let want = SymFunc::generator(Basis::S, tau)
            .mul(&skew_schur(&shape).unwrap().plethysm_pt(2).unwrap())
            .unwrap()
            .to_basis(Basis::S)
            .unwrap();
        let got = SymFunc::from_terms(Basis::S, got.into_iter().map(|(k, v)| (k, QPoly::int(v))));
        assert_eq!(got, want);
    }

    #[test]
    fn littlewood_multiplication() {
        assert_eq!(littlewood_mult_sides(&p("2,2"), &p("1,1"), 2).unwrap(), (2, 2));
        assert_eq!(littlewood_mult_sides(&p("2"), &p("1"), 2).unwrap(), (1, 1));
        assert_eq!(littlewood_mult_sides(&p("2,1"), &p("1"), 3).unwrap(), (-1, -1));
        // (3,2,1) is itself a 2-core, so both sides vanish.
        assert_eq!(littlewood_mult_sides(&p("3,2,1"), &p("3"), 2).unwrap(), (0, 0));
        assert!(littlewood_mult_check(&p("2"), &p("1"), 3).is_err());
    }

    #[test]
    fn farahat_small() {
        let shape = SkewShape::new(p("3,1"), p("1,1")).unwrap();
        let (l, r) = farahat_sides(&shape, &p("1"), 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn a_coefficients_trivial() {
        for t in 2..=3 {
            for f in [Family::Sp, Family::O, Family::SoPlus] {
                assert_eq!(a_coeff(&Partition::empty(), &Partition::empty(), f, t).unwrap(), 1);
            }
        }
        assert!(a_coeffs_formula(&p("1"), Family::SoMinus, 2).is_err());
    }

    #[test]
    fn b_coefficients() {
        assert_eq!(b_coeff(&Partition::empty(), &Partition::empty(), 3).unwrap(), 1);
        assert_eq!(b_coeff(&p("2"), &p("1"), 2).unwrap(), 0);
        let so = a_coeffs_elimination(&p("1"), Family::SoPlus, 3).unwrap();
        for term in sxp_universal_so(&p("1"), 3).unwrap() {
            assert_eq!(so.get(&term.nu).copied().unwrap_or(0), term.value(), "{}", term.nu);
        }
    }

    #[test]
    fn construction_worked_example() {
        let lam = p("15,14,10,7,4,3,2,1");
        let cq = core_quotient(&lam, 5).unwrap();
        assert_eq!(cq.kappa, vec![0, -1, 1, 0, 0]);
        assert_eq!(cq.quotient, vec![p("-"), p("-"), p("2,2,1"), p("1"), p("3,1")]);
        let out = construction_so(&lam, 8, 5).unwrap();
        assert_eq!(out.weights, vec![vec![0, -1, -1], vec![0, 0, -1], vec![3, 1]]);
        assert_eq!(out.gl_sizes, vec![3, 3]);
        assert_eq!(out.so_rank, Some(2));
        assert_eq!(out.group(), "GL3 x GL3 x SO5");
    }

    #[test]
    fn construction_edges() {
        let out = construction_so(&Partition::empty(), 4, 3).unwrap();
        assert!(out.weights.iter().flatten().all(|&x| x == 0));
        assert!(construction_so(&p("1,1,1"), 2, 2).is_err());
        // b = 0 pairs runner t−1−r with runner r.
        let lam = from_core_quotient(&Partition::empty(), &[p("1"), p("2"), p("-"), p("1,1")], 4).unwrap();
        let out = construction_so(&lam, 8, 4).unwrap();
        assert_eq!(out.weights, vec![vec![1, 1, 0, -1], vec![0, 0, 0, -2]]);
        assert_eq!(out.so_rank, None);
    }
}
