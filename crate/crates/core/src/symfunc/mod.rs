//! Symmetric functions with coefficients in ℚ\[q\].
//!
//! A [`SymFunc`] is a finite combination of basis elements of one of the five
//! classical bases. The power sums are the backbone: products, plethysm by
//! p_t, the Verschiebung operators and the Hall inner product are all monomial
//! or diagonal there. Schur functions are the presentation basis.

mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::det::{determinant, LinComb};
use crate::error::{Error, Result};
use crate::littlewood::{core_quotient, is_t_tileable, sgn_t};
use crate::partition::{Partition, SkewShape};
use crate::qpoly::{rat, QPoly, Rational};
use crate::sxp::characters::char_table;

pub(crate) use tables::{cached, h_in_p, omega_sign, RatComb};
pub use tables::z_lambda;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(14);

/// Largest n for which character tables of S_n may be built.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: usize) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    let cap = max_degree();
    if n > cap {
        Err(Error::DegreeCap { degree: n, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    H,
    E,
    M,
    S,
}

impl Basis {
    fn multiplicative(self) -> bool {
        matches!(self, Basis::P | Basis::H | Basis::E)
    }

    fn letter(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            _ => Err(Error::Invalid(format!("unknown basis {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::generator(basis, Partition::empty())
    }

    /// The basis element indexed by λ.
    pub fn generator(basis: Basis, lambda: Partition) -> Self {
        Self::monomial(basis, lambda, QPoly::one())
    }

    pub fn monomial(basis: Basis, lambda: Partition, c: QPoly) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, &c);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, QPoly)>) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            f.add_term(k, &c);
        }
        f
    }

    pub(crate) fn from_lincomb(basis: Basis, l: LinComb<Partition>) -> Self {
        SymFunc { basis, terms: l.0 }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    fn add_scaled(&mut self, comb: &RatComb, c: &QPoly) {
        for (k, v) in comb {
            self.add_term(k.clone(), &c.scale(v));
        }
    }

    pub fn scale(&self, c: &QPoly) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    /// Highest degree present, or `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn degree_part(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Sum of two functions; the result is in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&QPoly::int(-1))
    }

    pub fn to_p(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::P);
        for (lam, c) in &self.terms {
            match self.basis {
                Basis::P => out.add_term(lam.clone(), c),
                Basis::H => out.add_scaled(&h_in_p(lam), c),
                Basis::E => {
                    for (mu, v) in h_in_p(lam).iter() {
                        out.add_term(mu.clone(), &c.scale(&(v * rat(omega_sign(mu)))));
                    }
                }
                Basis::M => out.add_scaled(&tables::m_in_p(lam), c),
                Basis::S => out.add_scaled(&*tables::s_in_p(lam)?, c),
            }
        }
        Ok(out)
    }

    fn from_p(&self, target: Basis) -> Result<SymFunc> {
        debug_assert_eq!(self.basis, Basis::P);
        let mut out = SymFunc::zero(target);
        for (mu, c) in &self.terms {
            match target {
                Basis::P => out.add_term(mu.clone(), c),
                Basis::H => out.add_scaled(&tables::p_in_h(mu), c),
                Basis::E => out.add_scaled(&tables::p_in_h(mu), &c.scale_int(omega_sign(mu))),
                Basis::M => out.add_scaled(&tables::p_in_m(mu), c),
                Basis::S => out.add_scaled(&*tables::p_in_s(mu)?, c),
            }
        }
        Ok(out)
    }

    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if self.basis == target {
            return Ok(self.clone());
        }
        self.to_p()?.from_p(target)
    }

    /// Equality as symmetric functions, whatever the bases.
    pub fn same_function(&self, other: &SymFunc) -> Result<bool> {
        if self.basis == other.basis {
            return Ok(self.terms == other.terms);
        }
        Ok(self.to_p()? == other.to_p()?)
    }

    /// Ring product, returned in the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis == other.basis && self.basis.multiplicative() {
            return Ok(concat_product(self, other));
        }
        concat_product(&self.to_p()?, &other.to_p()?).to_basis(self.basis)
    }

    /// ω, returned in the basis of `self`.
    pub fn omega(&self) -> Result<SymFunc> {
        let relabel = |b: Basis, f: fn(&Partition) -> Partition| {
            SymFunc { basis: b, terms: self.terms.iter().map(|(k, v)| (f(k), v.clone())).collect() }
        };
        Ok(match self.basis {
            Basis::P => self.map_terms(|k, v| v.scale_int(omega_sign(k))),
            Basis::H => relabel(Basis::E, Partition::clone).to_basis(Basis::H)?,
            Basis::E => relabel(Basis::H, Partition::clone).to_basis(Basis::E)?,
            Basis::S => relabel(Basis::S, Partition::conjugate),
            Basis::M => self.to_p()?.omega()?.to_basis(Basis::M)?,
        })
    }

    fn map_terms(&self, f: impl Fn(&Partition, &QPoly) -> QPoly) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))))
    }

    /// f ∘ p_t: p_λ ↦ p_{tλ}. Returned in the basis of `self`.
    pub fn plethysm_pt(&self, t: usize) -> Result<SymFunc> {
        if t == 0 {
            return Err(Error::Invalid("plethysm by p_0".into()));
        }
        let p = self.to_p()?;
        let out = SymFunc { basis: Basis::P, terms: p.terms.into_iter().map(|(k, v)| (k.scale(t), v)).collect() };
        out.to_basis(self.basis)
    }

    /// φ_t: p_λ ↦ t^{l(λ)} p_{λ/t} when t divides every part, else 0.
    /// Returned in the basis of `self`.
    pub fn verschiebung(&self, t: usize) -> Result<SymFunc> {
        if t == 0 {
            return Err(Error::Invalid("Verschiebung with t = 0".into()));
        }
        let p = self.to_p()?;
        let mut out = SymFunc::zero(Basis::P);
        for (k, v) in &p.terms {
            if let Some(d) = k.divide(t) {
                let f = rat(t as i64).pow(k.len() as i32);
                out.add_term(d, &v.scale(&f));
            }
        }
        out.to_basis(self.basis)
    }

    /// Substitute q ↦ s·q in every coefficient.
    pub fn rescale_q(&self, s: &Rational) -> SymFunc {
        self.map_coeffs(|c| c.rescale_q(s))
    }

    /// Ordered for display: degree descending, then reverse lexicographic.
    pub fn display_order(&self) -> Vec<(&Partition, &QPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
        v
    }
}

fn concat_product(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(a.basis);
    for (x, u) in &a.terms {
        for (y, v) in &b.terms {
            out.add_term(x.union(y), &(u * v));
        }
    }
    out
}

/// Hall inner product.
pub fn hall(f: &SymFunc, g: &SymFunc) -> Result<QPoly> {
    let dual = matches!(
        (f.basis, g.basis),
        (Basis::S, Basis::S) | (Basis::H, Basis::M) | (Basis::M, Basis::H)
    );
    if dual {
        return Ok(pair_diagonal(f, g, |_| Rational::one()));
    }
    let (fp, gp) = (f.to_p()?, g.to_p()?);
    Ok(pair_diagonal(&fp, &gp, |k| Rational::from_integer(z_lambda(k))))
}

fn pair_diagonal(f: &SymFunc, g: &SymFunc, weight: impl Fn(&Partition) -> Rational) -> QPoly {
    let mut acc = QPoly::zero();
    for (k, u) in &f.terms {
        if let Some(v) = g.terms.get(k) {
            acc += &(u * v).scale(&weight(k));
        }
    }
    acc
}

fn h_entry(k: i64) -> LinComb<Partition> {
    match k {
        k if k < 0 => LinComb::zero(),
        0 => LinComb::one(),
        k => LinComb::term(Partition::from_sorted(vec![k as usize]), QPoly::one()),
    }
}

/// det(h_{λ_i−μ_j−i+j}) over l(λ) rows.
fn jt_det(outer: &Partition, inner: &Partition) -> LinComb<Partition> {
    let n = outer.len();
    let m: Vec<Vec<_>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| h_entry(outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// e_k = Σ_{i=1}^{k} (−1)^{i−1} h_i e_{k−i}, in the h basis.
fn ek_in_h(k: usize) -> Arc<LinComb<Partition>> {
    type C = std::sync::RwLock<std::collections::HashMap<usize, Arc<LinComb<Partition>>>>;
    static CACHE: OnceLock<C> = OnceLock::new();
    cached(&CACHE, &k, || {
        if k == 0 {
            return LinComb::one();
        }
        let mut acc = LinComb::zero();
        for i in 1..=k {
            let c = QPoly::int(if i % 2 == 1 { 1 } else { -1 });
            acc.add_assign(&ek_in_h(k - i).mul(&h_entry(i as i64)).scale(&c));
        }
        acc
    })
}

fn e_in_h(lambda: &Partition) -> Arc<LinComb<Partition>> {
    type C = std::sync::RwLock<std::collections::HashMap<Partition, Arc<LinComb<Partition>>>>;
    static CACHE: OnceLock<C> = OnceLock::new();
    cached(&CACHE, lambda, || lambda.parts().iter().fold(LinComb::one(), |acc, &k| acc.mul(&ek_in_h(k))))
}

/// s_{λ/μ} in the h basis. Zero when μ ⊄ λ. Tall shapes go through the dual
/// determinant in e, which is much smaller than the h one.
pub(crate) fn skew_h(outer: &Partition, inner: &Partition) -> Arc<LinComb<Partition>> {
    type C = std::sync::RwLock<std::collections::HashMap<(Partition, Partition), Arc<LinComb<Partition>>>>;
    static CACHE: OnceLock<C> = OnceLock::new();
    cached(&CACHE, &(outer.clone(), inner.clone()), || {
        if !outer.contains(inner) {
            return LinComb::zero();
        }
        if outer.first() >= outer.len() {
            return jt_det(outer, inner);
        }
        let mut acc = LinComb::zero();
        for (nu, c) in jt_det(&outer.conjugate(), &inner.conjugate()).0 {
            acc.add_assign(&e_in_h(&nu).scale(&c));
        }
        acc
    })
}

/// Jacobi–Trudi in the h basis.
pub fn jacobi_trudi_h(shape: &SkewShape) -> SymFunc {
    SymFunc::from_lincomb(Basis::H, (*skew_h(&shape.outer, &shape.inner)).clone())
}

/// Dual Jacobi–Trudi, det(e_{λ′_i−μ′_j−i+j}), in the e basis.
pub fn jacobi_trudi_e(shape: &SkewShape) -> SymFunc {
    let c = shape.conjugate();
    SymFunc::from_lincomb(Basis::E, jt_det(&c.outer, &c.inner))
}

/// The skew Schur function s_{λ/μ}, in the s basis.
pub fn skew_schur(shape: &SkewShape) -> Result<SymFunc> {
    jacobi_trudi_h(shape).to_basis(Basis::S)
}

/// Product of skew Schur functions in the h basis.
pub(crate) fn skew_product_h(shapes: &[(Partition, Partition)]) -> LinComb<Partition> {
    let mut acc = LinComb::one();
    for (o, i) in shapes {
        acc = acc.mul(&skew_h(o, i));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// φ_t s_{λ/μ} by the tiling rule: zero unless λ/μ is t-tileable, otherwise
/// sgn_t(λ/μ) Π_r s_{λ^(r)/μ^(r)}. Returned in the s basis.
pub fn verschiebung_schur(shape: &SkewShape, t: usize) -> Result<SymFunc> {
    Ok(verschiebung_schur_h(shape, t)?.to_basis(Basis::S)?)
}

pub(crate) fn verschiebung_schur_h(shape: &SkewShape, t: usize) -> Result<SymFunc> {
    if !is_t_tileable(shape, t)? {
        return Ok(SymFunc::zero(Basis::H));
    }
    let a = core_quotient(&shape.outer, t)?;
    let b = core_quotient(&shape.inner, t)?;
    let pairs: Vec<_> = a.quotient.into_iter().zip(b.quotient).collect();
    let sign = sgn_t(shape, t)?;
    Ok(SymFunc::from_lincomb(Basis::H, skew_product_h(&pairs)).scale(&QPoly::int(sign as i64)))
}

/// Multi-Littlewood–Richardson coefficient ⟨Π s_{shape}, s_λ⟩.
pub fn lr_coeff(lambda: &Partition, factors: &[SkewShape]) -> Result<u64> {
    if factors.iter().map(SkewShape::size).sum::<usize>() != lambda.size() {
        return Ok(0);
    }
    let pairs: Vec<_> = factors.iter().map(|s| (s.outer.clone(), s.inner.clone())).collect();
    let prod = SymFunc::from_lincomb(Basis::H, skew_product_h(&pairs));
    let v = schur_coefficient(&prod, lambda)?;
    let c = v.coeff(0);
    if v.degree().unwrap_or(0) > 0 || !c.is_integer() || c.is_negative() {
        return Err(Error::Invalid(format!("LR coefficient came out as {v}")));
    }
    Ok(c.to_integer().try_into().map_err(|_| Error::Invalid("LR coefficient overflow".into()))?)
}

/// ⟨f, s_λ⟩ computed through the p basis: Σ_μ f_μ χ^λ(μ).
pub fn schur_coefficient(f: &SymFunc, lambda: &Partition) -> Result<QPoly> {
    if f.basis == Basis::S {
        return Ok(f.coeff(lambda));
    }
    let fp = f.to_p()?;
    let n = lambda.size();
    let table = char_table(n)?;
    let mut acc = QPoly::zero();
    for (mu, c) in &fp.terms {
        if mu.size() == n {
            acc += &c.scale_int(table.value(lambda, mu));
        }
    }
    Ok(acc)
}

/// Σ_ν c^ν_{α¹,…} s_ν for a list of straight shapes.
pub fn schur_product(parts: &[Partition]) -> Result<SymFunc> {
    let pairs: Vec<_> = parts.iter().map(|p| (p.clone(), Partition::empty())).collect();
    SymFunc::from_lincomb(Basis::H, skew_product_h(&pairs)).to_basis(Basis::S)
}

fn write_coeff_term(out: &mut String, first: bool, c: &QPoly, elem: &str) {
    let (neg, body) = match c.terms().count() {
        1 => {
            let (k, r) = c.terms().next().expect("one term");
            let mag = QPoly::monomial(k, r.abs());
            (r.is_negative(), if mag.is_one() { String::new() } else { format!("{mag}*") })
        }
        _ => (false, format!("({c})*")),
    };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    out.push_str(&body);
    out.push_str(elem);
}

pub(crate) fn bracket(p: &Partition) -> String {
    let inner: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl fmt::Display for SymFunc {
    /// `s[2] + q*s[]`: degree descending, then reverse lexicographic.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (k, c)) in self.display_order().into_iter().enumerate() {
            write_coeff_term(&mut out, i == 0, c, &format!("{}{}", self.basis, bracket(k)));
        }
        f.write_str(&out)
    }
}

/// Serializes a QPoly as `[[power, "p/q"], …]`.
pub(crate) struct CoefJson<'a>(pub &'a QPoly);

impl Serialize for CoefJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(None)?;
        for (k, c) in self.0.terms() {
            seq.serialize_element(&(k, c.to_string()))?;
        }
        seq.end()
    }
}

struct TermJson<'a>(&'a Partition, &'a QPoly);

impl Serialize for TermJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("part", self.0)?;
        m.serialize_entry("coef", &CoefJson(self.1))?;
        m.end()
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self.display_order().into_iter().map(|(k, c)| TermJson(k, c)).collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("basis", self.basis.letter())?;
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(x: &str) -> SymFunc {
        SymFunc::generator(Basis::S, p(x))
    }

    fn sum(basis: Basis, terms: &[(&str, i64)]) -> SymFunc {
        SymFunc::from_terms(basis, terms.iter().map(|(k, c)| (p(k), QPoly::int(*c))))
    }

    #[test]
    fn generators_and_conversions() {
        let e2 = s("1,1").to_basis(Basis::H).unwrap();
        assert_eq!(e2, sum(Basis::H, &[("1,1", 1), ("2", -1)]));
        let p2 = SymFunc::generator(Basis::P, p("2")).to_basis(Basis::S).unwrap();
        assert_eq!(p2, sum(Basis::S, &[("2", 1), ("1,1", -1)]));
        let h2 = SymFunc::generator(Basis::H, p("2")).to_basis(Basis::P).unwrap();
        let half = QPoly::constant(ratio(1, 2));
        assert_eq!(h2, SymFunc::from_terms(Basis::P, [(p("1,1"), half.clone()), (p("2"), half)]));
        assert_eq!(
            jacobi_trudi_h(&SkewShape::straight(p("2"))),
            SymFunc::generator(Basis::H, p("2"))
        );
    }

    #[test]
    fn products() {
        assert_eq!(s("1").mul(&s("1")).unwrap(), sum(Basis::S, &[("2", 1), ("1,1", 1)]));
        assert_eq!(s("2").mul(&s("1,1")).unwrap(), sum(Basis::S, &[("3,1", 1), ("2,1,1", 1)]));
        assert_eq!(s("3,1").mul(&SymFunc::one(Basis::S)).unwrap(), s("3,1"));
    }

    #[test]
    fn hall_products() {
        assert_eq!(hall(&s("2,1"), &s("2,1")).unwrap(), QPoly::one());
        assert!(hall(&s("2,1"), &s("3")).unwrap().is_zero());
        let p2 = SymFunc::generator(Basis::P, p("2"));
        assert_eq!(hall(&p2, &p2).unwrap(), QPoly::int(2));
        let h = SymFunc::generator(Basis::H, p("2,1"));
        let m = SymFunc::generator(Basis::M, p("2,1")).to_basis(Basis::P).unwrap();
        assert_eq!(hall(&h, &m).unwrap(), QPoly::one());
    }

    #[test]
    fn omega_examples() {
        let h3 = SymFunc::generator(Basis::H, p("3"));
        let e3 = SymFunc::generator(Basis::E, p("3")).to_basis(Basis::H).unwrap();
        assert_eq!(h3.omega().unwrap(), e3);
        assert_eq!(s("2,1").omega().unwrap(), s("2,1"));
    }

    #[test]
    fn plethysm_and_verschiebung() {
        let p1 = s("1").plethysm_pt(2).unwrap();
        assert_eq!(p1, sum(Basis::S, &[("2", 1), ("1,1", -1)]));
        assert_eq!(s("2,1").plethysm_pt(1).unwrap(), s("2,1"));
        let h = |x: &str| SymFunc::generator(Basis::H, p(x));
        assert_eq!(h("4").verschiebung(2).unwrap(), h("2"));
        assert!(h("3").verschiebung(2).unwrap().is_zero());
        let e2 = SymFunc::generator(Basis::E, p("2"));
        assert_eq!(e2.verschiebung(2).unwrap(), SymFunc::generator(Basis::E, p("1")).neg());
        let p22 = SymFunc::generator(Basis::P, p("2,2"));
        assert_eq!(p22.verschiebung(2).unwrap(), SymFunc::monomial(Basis::P, p("1,1"), QPoly::int(4)));
    }

    #[test]
    fn skew_examples() {
        let sk = skew_schur(&SkewShape::new(p("2,1"), p("1")).unwrap()).unwrap();
        assert_eq!(sk, sum(Basis::S, &[("2", 1), ("1,1", 1)]));
        assert_eq!(skew_schur(&SkewShape::straight(p("3,2"))).unwrap(), s("3,2"));
        let v = |x: &str| verschiebung_schur(&SkewShape::straight(p(x)), 2).unwrap();
        assert_eq!(v("2"), s("1"));
        assert_eq!(v("1,1"), s("1").neg());
        assert!(v("1").is_zero());
    }

    #[test]
    fn lr_examples() {
        let f = |x: &str| SkewShape::straight(p(x));
        assert_eq!(lr_coeff(&p("2,1"), &[f("1"), f("1,1")]).unwrap(), 1);
        assert_eq!(lr_coeff(&p("3,2"), &[f("3,2"), f("-")]).unwrap(), 1);
        assert_eq!(lr_coeff(&p("2"), &[f("1"), f("1")]).unwrap(), 1);
        assert_eq!(lr_coeff(&p("1,1"), &[f("1"), f("1")]).unwrap(), 1);
        assert_eq!(lr_coeff(&p("3"), &[f("1"), f("1")]).unwrap(), 0);
    }

    #[test]
    fn rendering() {
        let f = SymFunc::from_terms(Basis::S, [(p("2"), QPoly::one()), (p("-"), QPoly::q())]);
        assert_eq!(f.to_string(), "s[2] + q*s[]");
        let json = serde_json::to_string(&SymFunc::from_terms(
            Basis::S,
            [(p("2"), &QPoly::one() + &QPoly::q())],
        ))
        .unwrap();
        assert_eq!(json, r#"{"basis":"s","terms":[{"part":[2],"coef":[[0,"1"],[1,"1"]]}]}"#);
        let g = SymFunc::from_terms(Basis::S, [(p("1,1"), QPoly::int(-2)), (p("2"), QPoly::constant(ratio(1, 2)))]);
        assert_eq!(g.to_string(), "1/2*s[2] - 2*s[1,1]");
    }

    #[test]
    fn degree_guard() {
        let big = s("15");
        assert!(matches!(big.to_p(), Err(Error::DegreeCap { .. })));
    }
}
