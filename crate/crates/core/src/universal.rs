//! Universal characters of the classical groups, Koike's rational characters
//! and their Hamel–King deformations, and the Verschiebung factorization of
//! 𝒳_λ(z;q).
//!
//! Every object here has a determinant and a skew Schur expansion. Both are
//! computed in the h basis (h ⊗ h for two alphabets), where comparison is a
//! plain map equality.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::det::{determinant, LinComb, MonoKey};
use crate::error::{check_modulus, Error, Result};
use crate::littlewood::{core_quotient, is_t_tileable, kappa_in_class, minimal_z_asym, sgn_t};
use crate::partition::{Partition, SkewShape};
use crate::qpoly::{rat, QPoly};
use crate::symfunc::{bracket, lr_coeff, skew_h, Basis, CoefJson, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sp,
    O,
    SoPlus,
    SoMinus,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Sp, Family::O, Family::SoPlus, Family::SoMinus];

    /// The (z, q) at which 𝒳_λ(z;q) specializes to this family.
    pub fn hamel_king_point(self) -> (i64, i64) {
        match self {
            Family::Sp => (-1, 1),
            Family::O => (1, -1),
            Family::SoPlus => (0, 1),
            Family::SoMinus => (0, -1),
        }
    }

    pub fn from_hamel_king_point(z: i64, q: i64) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.hamel_king_point() == (z, q))
    }

    /// Tag used in factorization output.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Sp => "SP",
            Family::O => "O",
            Family::SoPlus => "SO+",
            Family::SoMinus => "SO-",
        }
    }

    pub(crate) fn skew_z(self) -> i64 {
        match self {
            Family::Sp => -1,
            Family::O => 1,
            Family::SoPlus | Family::SoMinus => 0,
        }
    }

    /// Sign attached to s_{λ/μ} in the skew expansion.
    pub(crate) fn skew_sign(self, mu: &Partition) -> i64 {
        let (n, r) = (mu.size() as i64, mu.rank() as i64);
        let e = match self {
            Family::Sp | Family::O => n / 2,
            Family::SoPlus => (n - r) / 2,
            Family::SoMinus => (n + r) / 2,
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sp => "sp",
            Family::O => "o",
            Family::SoPlus => "so+",
            Family::SoMinus => "so-",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(Family::Sp),
            "o" => Ok(Family::O),
            "so+" | "so_plus" | "soplus" | "so" => Ok(Family::SoPlus),
            "so-" | "so_minus" | "sominus" => Ok(Family::SoMinus),
            _ => Err(Error::Invalid(format!("unknown family {s}"))),
        }
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// c · h_n in the chosen key type; zero for n < 0.
fn h_term<K: MonoKey>(n: i64, c: &QPoly, embed: impl Fn(Partition) -> K) -> LinComb<K> {
    if n < 0 || c.is_zero() {
        return LinComb::zero();
    }
    let p = if n == 0 { Partition::empty() } else { Partition::from_sorted(vec![n as usize]) };
    LinComb::term(embed(p), c.clone())
}

fn h1(n: i64) -> LinComb<Partition> {
    h_term(n, &QPoly::one(), |p| p)
}

fn part(lambda: &Partition, i: usize) -> i64 {
    lambda.part(i) as i64
}

/// det_{1≤i,j≤k} (h_{λ_i−i+j} + s·h_{λ_i−i−j+d}), indices 1-based.
fn jt_pair(lambda: &Partition, k: usize, s: i64, d: i64) -> LinComb<Partition> {
    let m: Vec<Vec<_>> = (1..=k as i64)
        .map(|i| {
            let li = part(lambda, i as usize - 1);
            (1..=k as i64)
                .map(|j| {
                    let mut e = h1(li - i + j);
                    e.add_assign(&h_term(li - i - j + d, &QPoly::int(s), |p| p));
                    e
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

fn halve(l: LinComb<Partition>) -> LinComb<Partition> {
    l.scale(&QPoly::constant(crate::qpoly::ratio(1, 2)))
}

/// Which formula to evaluate a universal character with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Jacobi–Trudi in the h basis.
    HDeterminant,
    /// Dual Jacobi–Trudi in the e basis.
    EDeterminant,
    /// Signed sum of skew Schur functions over z-asymmetric inner shapes.
    SkewSum,
}

/// A universal character computed along a chosen route. The result is in
/// the h basis for the determinant and skew routes and the e basis for the
/// dual determinant.
pub fn universal_char_via(family: Family, lambda: &Partition, route: Route) -> SymFunc {
    match route {
        Route::HDeterminant => {
            let k = lambda.len();
            let l = match family {
                Family::Sp => halve(jt_pair(lambda, k.max(1), 1, 2)),
                Family::O => jt_pair(lambda, k, -1, 0),
                Family::SoPlus => jt_pair(lambda, k, 1, 1),
                Family::SoMinus => jt_pair(lambda, k, -1, 1),
            };
            SymFunc::from_lincomb(Basis::H, l)
        }
        Route::EDeterminant => {
            let c = lambda.conjugate();
            let k = c.len();
            let l = match family {
                Family::Sp => jt_pair(&c, k, -1, 0),
                Family::O => halve(jt_pair(&c, k.max(1), 1, 2)),
                Family::SoPlus => jt_pair(&c, k, 1, 1),
                Family::SoMinus => jt_pair(&c, k, -1, 1),
            };
            SymFunc::from_lincomb(Basis::E, l)
        }
        Route::SkewSum => {
            let z = family.skew_z();
            let mut acc = LinComb::zero();
            for mu in lambda.subpartitions() {
                if mu.is_z_asymmetric(z) {
                    acc.add_assign(&skew_h(lambda, &mu).scale(&QPoly::int(family.skew_sign(&mu))));
                }
            }
            SymFunc::from_lincomb(Basis::H, acc)
        }
    }
}

/// sp_λ, o_λ, so⁺_λ or so⁻_λ in the s basis.
pub fn universal_char(family: Family, lambda: &Partition) -> Result<SymFunc> {
    universal_char_via(family, lambda, Route::HDeterminant).to_basis(Basis::S)
}

/// Coefficients of s_λ in the universal characters of one family:
/// s_λ = Σ_μ d_μ u_μ with d_μ = Σ_ν c^λ_{μν} over the family's ν.
pub fn schur_in_universal(lambda: &Partition, family: Family) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for mu in lambda.subpartitions() {
        let rest = lambda.size() - mu.size();
        let mut d = 0i64;
        for nu in Partition::all(rest) {
            let keep = match family {
                Family::O => nu.parts().iter().all(|x| x % 2 == 0),
                Family::Sp => nu.conjugate().parts().iter().all(|x| x % 2 == 0),
                Family::SoPlus | Family::SoMinus => true,
            };
            if !keep || !lambda.contains(&nu) {
                continue;
            }
            let c = lr_coeff(lambda, &[SkewShape::straight(mu.clone()), SkewShape::straight(nu.clone())])? as i64;
            d += if family == Family::SoPlus { sign(nu.size() as i64) * c } else { c };
        }
        if d != 0 {
            out.insert(mu, d);
        }
    }
    Ok(out)
}

/// Hamel–King determinant det_{1≤i,j≤k}(h_{λ_i−i+j} + [j>−z] q h_{λ_i−i−j+1−z})
/// in the h basis, for a chosen window k ≥ l(λ) and value of q.
pub fn hamel_king_det(lambda: &Partition, z: i64, q: &QPoly, k: usize) -> Result<SymFunc> {
    if k < lambda.len() {
        return Err(Error::Window { window: k, len: lambda.len() });
    }
    let m: Vec<Vec<_>> = (1..=k as i64)
        .map(|i| {
            let li = part(lambda, i as usize - 1);
            (1..=k as i64)
                .map(|j| {
                    let mut e = h1(li - i + j);
                    if j > -z {
                        e.add_assign(&h_term(li - i - j + 1 - z, q, |p| p));
                    }
                    e
                })
                .collect()
        })
        .collect();
    Ok(SymFunc::from_lincomb(Basis::H, determinant(&m)))
}

/// Σ_{μ ∈ 𝒫_z, μ ⊆ λ} (−1)^{(|μ|−(z+1)rk μ)/2} q^{rk μ} s_{λ/μ}, in the h basis.
pub fn hamel_king_skew(lambda: &Partition, z: i64, q: &QPoly) -> SymFunc {
    let mut acc = LinComb::zero();
    for mu in lambda.subpartitions() {
        if !mu.is_z_asymmetric(z) {
            continue;
        }
        let r = mu.rank();
        let e = (mu.size() as i64 - (z + 1) * r as i64) / 2;
        let c = q.pow(r).scale_int(sign(e));
        acc.add_assign(&skew_h(lambda, &mu).scale(&c));
    }
    SymFunc::from_lincomb(Basis::H, acc)
}

/// 𝒳_λ(z;q) with q symbolic, in the s basis.
pub fn hamel_king(lambda: &Partition, z: i64) -> Result<SymFunc> {
    hamel_king_det(lambda, z, &QPoly::q(), lambda.len())?.to_basis(Basis::S)
}

/// Σ coef · s_α(X) s_β(Y).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc2 {
    terms: BTreeMap<(Partition, Partition), QPoly>,
}

type Pair = (Partition, Partition);

fn tensor(x: &LinComb<Partition>, y: &LinComb<Partition>, c: &QPoly) -> LinComb<Pair> {
    let mut out = LinComb::zero();
    for (a, u) in &x.0 {
        for (b, v) in &y.0 {
            out.add_term((a.clone(), b.clone()), &(&(u * v) * c));
        }
    }
    out
}

impl SymFunc2 {
    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), QPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_h(l: &LinComb<Pair>) -> Result<SymFunc2> {
        let mut out = LinComb::<Pair>::zero();
        let to_s = |p: &Partition| SymFunc::generator(Basis::H, p.clone()).to_basis(Basis::S);
        for ((a, b), c) in &l.0 {
            let (sa, sb) = (to_s(a)?, to_s(b)?);
            for (x, u) in sa.terms() {
                for (y, v) in sb.terms() {
                    out.add_term((x.clone(), y.clone()), &(&(u * v) * c));
                }
            }
        }
        Ok(SymFunc2 { terms: out.0 })
    }

    /// Set Y = X.
    pub fn diagonal(&self) -> Result<SymFunc> {
        let mut acc = LinComb::zero();
        for ((a, b), c) in &self.terms {
            acc.add_assign(&skew_h(a, &Partition::empty()).mul(&skew_h(b, &Partition::empty())).scale(c));
        }
        SymFunc::from_lincomb(Basis::H, acc).to_basis(Basis::S)
    }
}

impl fmt::Display for SymFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        let deg = |(a, b): &Pair| a.size() + b.size();
        v.sort_by(|(x, _), (y, _)| deg(y).cmp(&deg(x)).then_with(|| y.cmp(x)));
        for (i, ((a, b), c)) in v.into_iter().enumerate() {
            let body = format!("s{}(X)*s{}(Y)", bracket(a), bracket(b));
            let (neg, coef) = match c.as_signed_monomial() {
                Some((s, 0)) => (s < 0, String::new()),
                Some((s, k)) => (s < 0, format!("{}*", QPoly::signed_monomial(1, k))),
                None => (false, format!("({c})*")),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{coef}{body}")?;
        }
        Ok(())
    }
}

impl Serialize for SymFunc2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct T<'a>(&'a Partition, &'a Partition, &'a QPoly);
        impl Serialize for T<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("x", self.0)?;
                m.serialize_entry("y", self.1)?;
                m.serialize_entry("coef", &CoefJson(self.2))?;
                m.end()
            }
        }
        let terms: Vec<_> = self.terms.iter().map(|((a, b), c)| T(a, b, c)).collect();
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

/// Parameters of the deformed rational character rs_{λ,μ}(X;Y;a,b;c;u,v).
#[derive(Clone, Debug)]
pub struct RsParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub u: QPoly,
    pub v: QPoly,
}

impl RsParams {
    /// Koike's rs_{λ,μ}: a = b = c = 0, u = v = 1.
    pub fn koike() -> Self {
        RsParams { a: 0, b: 0, c: 0, u: QPoly::one(), v: QPoly::one() }
    }

    /// rs(a;c;q): both shifts a and both weights q.
    pub fn single(a: i64, c: i64, q: &QPoly) -> Self {
        RsParams { a, b: a, c, u: q.clone(), v: q.clone() }
    }
}

/// The block matrix whose determinant is u^c (−1)^{Kc+C(c+1,2)} rs, with
/// K = max(k, c) rows on top. `hx` and `hy` embed h_n of either alphabet.
pub(crate) fn rs_matrix<K: MonoKey>(
    lambda: &Partition,
    mu: &Partition,
    p: &RsParams,
    k: usize,
    l: usize,
    hx: impl Fn(Partition) -> K + Copy,
    hy: impl Fn(Partition) -> K + Copy,
) -> Vec<Vec<LinComb<K>>> {
    let c = p.c;
    let top = k.max(c as usize) as i64;
    let left: Vec<i64> = (c + 1..=k as i64).collect();
    let right: Vec<i64> = (1 - c..=l as i64).collect();
    let one = QPoly::one();
    let mut m = Vec::new();
    for i in 1..=top {
        let li = part(lambda, i as usize - 1);
        let mut row: Vec<_> = left.iter().map(|&j| h_term(li - i + j, &one, hx)).collect();
        row.extend(right.iter().map(|&j| {
            if j > -p.a - c {
                h_term(li - i - j - p.a + 1, &p.u, hx)
            } else {
                LinComb::zero()
            }
        }));
        m.push(row);
    }
    for i in 1..=l as i64 {
        let mi = part(mu, i as usize - 1);
        let mut row: Vec<_> = left
            .iter()
            .map(|&j| if j > -p.b { h_term(mi - i - j + 1 - p.b, &p.v, hy) } else { LinComb::zero() })
            .collect();
        row.extend(right.iter().map(|&j| h_term(mi - i + j, &one, hy)));
        m.push(row);
    }
    m
}

fn rs_normalize<K: MonoKey>(d: LinComb<K>, p: &RsParams, k: usize) -> Result<LinComb<K>> {
    let c = p.c as usize;
    let top = k.max(c);
    let e = (top * c + c * (c + 1) / 2) as i64;
    let uc = p.u.pow(c).scale_int(sign(e));
    let mut out = LinComb::zero();
    for (key, coef) in d.0 {
        let qt = coef
            .div_exact(&uc)
            .ok_or_else(|| Error::Invalid(format!("rs determinant not divisible by u^{c}")))?;
        out.add_term(key, &qt);
    }
    Ok(out)
}

fn check_rs(lambda: &Partition, mu: &Partition, p: &RsParams, k: usize, l: usize) -> Result<()> {
    if p.c < 0 {
        return Err(Error::Invalid(format!("rs needs c ≥ 0, got {}", p.c)));
    }
    if k < lambda.len() {
        return Err(Error::Window { window: k, len: lambda.len() });
    }
    if l < mu.len() {
        return Err(Error::Window { window: l, len: mu.len() });
    }
    Ok(())
}

/// rs_{λ,μ}(X;Y;a,b;c;u,v) by the block determinant with windows k, ℓ, in h ⊗ h.
pub(crate) fn rs2_det_h(lambda: &Partition, mu: &Partition, p: &RsParams, k: usize, l: usize) -> Result<LinComb<Pair>> {
    check_rs(lambda, mu, p, k, l)?;
    let m = rs_matrix(lambda, mu, p, k, l, |x| (x, Partition::empty()), |y| (Partition::empty(), y));
    rs_normalize(determinant(&m), p, k)
}

/// The same with X = Y, in h.
pub(crate) fn rs_det_h(lambda: &Partition, mu: &Partition, p: &RsParams, k: usize, l: usize) -> Result<LinComb<Partition>> {
    check_rs(lambda, mu, p, k, l)?;
    let m = rs_matrix(lambda, mu, p, k, l, |x| x, |y| y);
    rs_normalize(determinant(&m), p, k)
}

/// Candidate ν for the skew expansion: those that can satisfy
/// ν + (a^m) ⊆ λ and ν′ + (b^r) ⊆ μ.
fn rs_nu_candidates(lambda: &Partition, mu: &Partition, a: i64, b: i64) -> Vec<Partition> {
    let ea = (-a).max(0) as usize;
    let eb = (-b).max(0) as usize;
    let cols = lambda.first() + ea;
    let rows = mu.first() + eb;
    let bound: Vec<usize> = (0..rows)
        .map(|i| {
            let fit = (0..cols).filter(|&j| mu.part(j) + eb > i).count();
            (lambda.part(i) + ea).min(fit)
        })
        .filter(|&x| x > 0)
        .collect();
    Partition::from_sorted(bound).subpartitions()
}

/// One admissible term of the rs skew expansion.
pub(crate) struct RsTerm {
    pub nu: Partition,
    pub rank: usize,
    /// ±1 from straightening a shifted shape that is not a partition.
    pub sign: i64,
    pub inner_x: Partition,
    pub inner_y: Partition,
}

/// v + (m^rows) as a raw integer vector.
fn shift_rows(v: &Partition, m: i64, rows: usize) -> Vec<i64> {
    (0..rows.max(v.len())).map(|i| v.part(i) as i64 + if i < rows { m } else { 0 }).collect()
}

/// Straightens κ in det(h_{λ_i−κ_j−i+j}): sort κ_j − j decreasingly. `None`
/// when the determinant vanishes or a part stays negative.
fn straighten(kappa: &[i64]) -> Option<(Partition, i64)> {
    let mut beta: Vec<i64> = kappa.iter().enumerate().map(|(j, &k)| k - j as i64).collect();
    let mut sgn = 1;
    for i in 0..beta.len() {
        for j in 0..beta.len() - 1 - i {
            if beta[j] < beta[j + 1] {
                beta.swap(j, j + 1);
                sgn = -sgn;
            } else if beta[j] == beta[j + 1] {
                return None;
            }
        }
    }
    let parts: Vec<i64> = beta.iter().enumerate().map(|(j, &b)| b + j as i64).collect();
    if parts.iter().any(|&x| x < 0) {
        return None;
    }
    Some((Partition::from_sorted(parts.into_iter().map(|x| x as usize).collect()), sgn))
}

/// The admissible ν with their inner shapes. Writing r = rk_c(ν), ν must
/// keep rank r on both sides: rk_c(ν + (a^{c+r})) = r, and ν′ + (b^r) has
/// its first r rows reaching the diagonal. When ν′ + (b^r) is not a partition
/// it is straightened, which contributes a sign.
pub(crate) fn rs_terms(lambda: &Partition, mu: &Partition, a: i64, b: i64, c: i64) -> Vec<RsTerm> {
    let mut out = Vec::new();
    for nu in rs_nu_candidates(lambda, mu, a, b) {
        let r = nu.shifted_rank(c);
        let Some(inner_x) = nu.add_rectangle(a, c as usize + r) else { continue };
        if inner_x.shifted_rank(c) != r {
            continue;
        }
        let raw_y = shift_rows(&nu.conjugate(), b, r);
        if (0..r).any(|i| raw_y[i] <= i as i64) {
            continue;
        }
        let Some((inner_y, sy)) = straighten(&raw_y) else { continue };
        if lambda.contains(&inner_x) && mu.contains(&inner_y) {
            out.push(RsTerm { nu, rank: r, sign: sy, inner_x, inner_y });
        }
    }
    out
}

fn rs_term_coef(t: &RsTerm, p: &RsParams) -> QPoly {
    (&p.u * &p.v).pow(t.rank).scale_int(t.sign * sign(t.nu.size() as i64))
}

pub(crate) fn rs2_expand_h(lambda: &Partition, mu: &Partition, p: &RsParams) -> LinComb<Pair> {
    let mut acc = LinComb::zero();
    for t in rs_terms(lambda, mu, p.a, p.b, p.c) {
        acc.add_assign(&tensor(&skew_h(lambda, &t.inner_x), &skew_h(mu, &t.inner_y), &rs_term_coef(&t, p)));
    }
    acc
}

/// rs_{λ,μ}(X;Y;a,b;c;u,v) in s ⊗ s, by the determinant with minimal windows.
pub fn rs2(lambda: &Partition, mu: &Partition, p: &RsParams) -> Result<SymFunc2> {
    SymFunc2::from_h(&rs2_det_h(lambda, mu, p, lambda.len(), mu.len())?)
}

/// The skew expansion of [`rs2`].
pub fn rs2_expansion(lambda: &Partition, mu: &Partition, p: &RsParams) -> Result<SymFunc2> {
    if p.c < 0 {
        return Err(Error::Invalid(format!("rs needs c ≥ 0, got {}", p.c)));
    }
    SymFunc2::from_h(&rs2_expand_h(lambda, mu, p))
}

/// Koike's rs_{λ,μ} with X = Y, in the s basis.
pub fn rs(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    rs_single(lambda, mu, &RsParams::koike())?.to_basis(Basis::S)
}

/// rs_{λ,μ}(X;X;…) in the h basis. Negative c swaps the two partitions.
pub fn rs_single(lambda: &Partition, mu: &Partition, p: &RsParams) -> Result<SymFunc> {
    if p.c < 0 {
        let flipped = RsParams { c: -p.c, ..p.clone() };
        return rs_single(mu, lambda, &flipped);
    }
    Ok(SymFunc::from_lincomb(Basis::H, rs_det_h(lambda, mu, p, lambda.len(), mu.len())?))
}

/// Checks the determinant against the skew expansion with u, v independent.
///
/// u and v are encoded as q and q^D for a D beyond any power of u that can
/// occur, so equal images mean equal polynomials in u and v. The determinant
/// is evaluated at two window sizes.
pub fn rs2_identity_holds(lambda: &Partition, mu: &Partition, a: i64, b: i64, c: i64) -> Result<bool> {
    let (k, l) = (lambda.len(), mu.len());
    let cands = rs_nu_candidates(lambda, mu, a, b).iter().map(Partition::len).max().unwrap_or(0);
    let d = k.max(c as usize) + 2 + cands + lambda.first();
    let p = RsParams { a, b, c, u: QPoly::q(), v: QPoly::signed_monomial(1, d) };
    let expand = rs2_expand_h(lambda, mu, &p);
    Ok(rs2_det_h(lambda, mu, &p, k, l)? == expand && rs2_det_h(lambda, mu, &p, k + 1, l + 1)? == expand)
}

/// One factor of a Verschiebung factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// rs_{left,right}(shift; c; q).
    Rs { left: Partition, right: Partition, shift: i64, c: i64 },
    /// 𝒳_part(z; q).
    Chi { part: Partition, z: i64 },
    /// A classical universal character.
    Classical { family: Family, part: Partition },
}

impl Factor {
    /// The factor in the h basis at the given q.
    pub fn value(&self, q: &QPoly) -> Result<SymFunc> {
        match self {
            Factor::Rs { left, right, shift, c } => rs_single(left, right, &RsParams::single(*shift, *c, q)),
            Factor::Chi { part, z } => hamel_king_det(part, *z, q, part.len()),
            Factor::Classical { family, part } => Ok(universal_char_via(*family, part, Route::HDeterminant)),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Rs { left, right, shift, c } => write!(f, "rs[{left};{right}]({shift};{c})"),
            Factor::Chi { part, z } => write!(f, "X[{part}]({z})"),
            Factor::Classical { family, part } => write!(f, "{family}[{part}]"),
        }
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            Factor::Rs { left, right, shift, c } => {
                m.serialize_entry("kind", "RS")?;
                m.serialize_entry("parts", &[left, right])?;
                m.serialize_entry("shift", shift)?;
                m.serialize_entry("c", c)?;
            }
            Factor::Chi { part, z } => {
                m.serialize_entry("kind", "CHI")?;
                m.serialize_entry("parts", &[part])?;
                m.serialize_entry("z", z)?;
            }
            Factor::Classical { family, part } => {
                m.serialize_entry("kind", family.tag())?;
                m.serialize_entry("parts", &[part])?;
            }
        }
        m.end()
    }
}

/// ±q^power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Epsilon {
    pub sign: i32,
    pub power: usize,
}

impl Epsilon {
    pub fn value(self, q: &QPoly) -> QPoly {
        q.pow(self.power).scale_int(self.sign as i64)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", QPoly::signed_monomial(self.sign, self.power))
    }
}

/// φ_t 𝒳_λ(z;q) in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub lambda: Partition,
    pub z: i64,
    pub t: usize,
    /// `None` for q symbolic; otherwise the integer q was specialized to.
    pub q: Option<i64>,
    pub vanishes: bool,
    /// The closed form (−1)^{(|μ_c|−(z+1)rk)/2} sgn_t(λ/μ_c) q^{rk}, rk the
    /// rank of the core.
    pub epsilon: Option<Epsilon>,
    /// Π (−1)^{a·c} over rs factors rs(a;c;q) with a < 0. Those factors have
    /// leading term (−1)^{ac} rather than 1, and the product below the
    /// prefactor needs them normalized.
    pub correction: i32,
    pub kappa: Vec<i64>,
    pub core: Partition,
    pub mu_c: Option<Partition>,
    pub factors: Vec<Factor>,
}

impl FactorizationResult {
    /// ε(q) times the normalization of negative-shift rs factors.
    pub fn prefactor(&self) -> Option<Epsilon> {
        self.epsilon.map(|e| Epsilon { sign: e.sign * self.correction, power: e.power })
    }

    pub fn q_value(&self) -> QPoly {
        self.q.map_or_else(QPoly::q, QPoly::int)
    }

    /// ε(q) Π factors in the h basis.
    pub fn expand_h(&self) -> Result<SymFunc> {
        let Some(eps) = self.prefactor().filter(|_| !self.vanishes) else {
            return Ok(SymFunc::zero(Basis::H));
        };
        let q = self.q_value();
        let mut acc = SymFunc::monomial(Basis::H, Partition::empty(), eps.value(&q));
        for f in &self.factors {
            acc = acc.mul(&f.value(&q)?)?;
        }
        Ok(acc)
    }

    /// ε(q) Π factors in the s basis.
    pub fn expand(&self) -> Result<SymFunc> {
        self.expand_h()?.to_basis(Basis::S)
    }

    /// φ_t applied directly to the function being factored, in the s basis.
    pub fn direct(&self) -> Result<SymFunc> {
        self.direct_h()?.to_basis(Basis::S)
    }

    fn direct_h(&self) -> Result<SymFunc> {
        let f = hamel_king_det(&self.lambda, self.z, &self.q_value(), self.lambda.len())?;
        f.verschiebung(self.t)
    }

    /// Whether the factored form equals the direct image, compared in p.
    pub fn verify(&self) -> Result<bool> {
        let lhs = self.direct_h()?.to_p()?;
        let rhs = self.expand_h()?.to_p()?;
        Ok(lhs == rhs)
    }
}

impl fmt::Display for FactorizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vanishes {
            return f.write_str("0");
        }
        let eps = match (self.prefactor(), self.q) {
            (Some(e), Some(q)) => e.value(&QPoly::int(q)).to_string(),
            (Some(e), None) => e.to_string(),
            (None, _) => String::new(),
        };
        let body: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        if body.is_empty() {
            f.write_str(&eps)
        } else {
            write!(f, "{eps} * {}", body.join(" * "))
        }
    }
}

impl Serialize for FactorizationResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("lambda", &self.lambda)?;
        m.serialize_entry("z", &self.z)?;
        m.serialize_entry("t", &self.t)?;
        if let Some(q) = self.q {
            m.serialize_entry("q", &q)?;
        }
        m.serialize_entry("vanishes", &self.vanishes)?;
        m.serialize_entry("epsilon", &self.epsilon)?;
        if self.correction != 1 {
            m.serialize_entry("correction", &self.correction)?;
        }
        m.serialize_entry("kappa", &self.kappa)?;
        m.serialize_entry("core", &self.core)?;
        m.serialize_entry("mu_c", &self.mu_c)?;
        m.serialize_entry("factors", &self.factors)?;
        m.end()
    }
}

/// Factors φ_t 𝒳_λ(z;q) with q symbolic.
///
/// Writing z = at + b, the image vanishes unless κ_t(t-core λ) lies in the
/// class for b and λ contains the minimal z-asymmetric μ_c with that charge.
/// Otherwise it is ε(q) times rs factors pairing runners r ↔ b−r−1 (shift
/// a+1) and s ↔ t+b−s−1 (shift a), times up to two 𝒳 factors for runners
/// paired with themselves.
pub fn factor_verschiebung(lambda: &Partition, z: i64, t: usize) -> Result<FactorizationResult> {
    check_modulus(t)?;
    let cq = core_quotient(lambda, t)?;
    let (a, b) = (z.div_euclid(t as i64), z.rem_euclid(t as i64) as usize);
    let mut res = FactorizationResult {
        lambda: lambda.clone(),
        z,
        t,
        q: None,
        vanishes: true,
        epsilon: None,
        correction: 1,
        kappa: cq.kappa.clone(),
        core: cq.core.clone(),
        mu_c: None,
        factors: Vec::new(),
    };
    if !kappa_in_class(&cq.kappa, b, t) {
        return Ok(res);
    }
    let mu_c = minimal_z_asym(&cq.kappa, z, t)?;
    if !lambda.contains(&mu_c) || !is_t_tileable(&SkewShape::new(lambda.clone(), mu_c.clone())?, t)? {
        res.mu_c = Some(mu_c);
        return Ok(res);
    }
    let rk = cq.core.rank() as i64;
    let e = (mu_c.size() as i64 - (z + 1) * rk) / 2;
    let s = sign(e) as i32 * sgn_t(&SkewShape::new(lambda.clone(), mu_c.clone())?, t)?;
    res.epsilon = Some(Epsilon { sign: s, power: rk as usize });
    res.mu_c = Some(mu_c);
    res.vanishes = false;
    let quo = &cq.quotient;
    let c = &cq.kappa;
    for r in 0..b / 2 {
        res.factors.push(Factor::Rs { left: quo[r].clone(), right: quo[b - r - 1].clone(), shift: a + 1, c: c[r] });
    }
    for s in b..(t + b) / 2 {
        res.factors.push(Factor::Rs { left: quo[s].clone(), right: quo[t + b - s - 1].clone(), shift: a, c: c[s] });
    }
    if b % 2 == 1 {
        res.factors.push(Factor::Chi { part: quo[(b - 1) / 2].clone(), z: a + 1 });
    }
    if (t + b) % 2 == 1 {
        res.factors.push(Factor::Chi { part: quo[(t + b - 1) / 2].clone(), z: a });
    }
    for f in &res.factors {
        if let Factor::Rs { shift, c, .. } = f {
            if *shift < 0 {
                res.correction *= sign(shift * c) as i32;
            }
        }
    }
    Ok(res)
}

/// φ_t of so⁺_λ, o_λ or sp_λ (and so⁻_λ) in factored form: the general
/// factorization at the matching (z, q), with 𝒳 factors renamed.
pub fn factor_classical(lambda: &Partition, t: usize, family: Family) -> Result<FactorizationResult> {
    let (z, q) = family.hamel_king_point();
    let mut res = factor_verschiebung(lambda, z, t)?;
    res.q = Some(q);
    for f in &mut res.factors {
        if let Factor::Chi { part, z } = f {
            let fam = Family::from_hamel_king_point(*z, q)
                .ok_or_else(|| Error::Invalid(format!("no classical family at z = {z}, q = {q}")))?;
            *f = Factor::Classical { family: fam, part: part.clone() };
        }
    }
    Ok(res)
}

/// The sign the classical theorems state in terms of the core λ̃:
/// (−1)^{(|λ̃|∓rk λ̃)/2} for so±, (−1)^{|λ̃|/2} for o and sp.
pub fn classical_sign_exponent(family: Family, core: &Partition) -> i64 {
    let (n, r) = (core.size() as i64, core.rank() as i64);
    match family {
        Family::SoPlus => (n - r) / 2,
        Family::SoMinus => (n + r) / 2,
        Family::O | Family::Sp => n / 2,
    }
}

/// Direct φ_t of a classical universal character, in the h basis.
pub fn classical_direct_h(lambda: &Partition, t: usize, family: Family) -> Result<SymFunc> {
    universal_char_via(family, lambda, Route::HDeterminant).verschiebung(t)
}

pub(crate) fn q_specialize(f: &SymFunc, q: i64) -> SymFunc {
    f.map_coeffs(|c| QPoly::constant(c.eval(&rat(q))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s_sum(terms: &[(&str, i64)]) -> SymFunc {
        SymFunc::from_terms(Basis::S, terms.iter().map(|(k, c)| (p(k), QPoly::int(*c))))
    }

    #[test]
    fn small_universal_characters() {
        let so1 = universal_char(Family::SoPlus, &p("1")).unwrap();
        assert_eq!(so1, s_sum(&[("1", 1), ("-", 1)]));
        for fam in Family::ALL {
            assert_eq!(universal_char(fam, &p("-")).unwrap(), s_sum(&[("-", 1)]));
        }
        let sp11 = universal_char(Family::Sp, &p("1,1")).unwrap();
        assert_eq!(sp11, s_sum(&[("1,1", 1), ("-", -1)]));
    }

    #[test]
    fn routes_agree() {
        for lam in Partition::up_to(6) {
            for fam in Family::ALL {
                let h = universal_char_via(fam, &lam, Route::HDeterminant);
                let sk = universal_char_via(fam, &lam, Route::SkewSum);
                let e = universal_char_via(fam, &lam, Route::EDeterminant);
                assert_eq!(h, sk, "{fam} {lam}");
                assert!(h.same_function(&e).unwrap(), "{fam} {lam} e-form");
            }
        }
    }

    #[test]
    fn interrelation_inverts() {
        for lam in Partition::up_to(5) {
            for fam in Family::ALL {
                let coeffs = schur_in_universal(&lam, fam).unwrap();
                let mut acc = SymFunc::zero(Basis::S);
                for (mu, d) in coeffs {
                    acc = acc.add(&universal_char(fam, &mu).unwrap().scale(&QPoly::int(d))).unwrap();
                }
                assert_eq!(acc, SymFunc::generator(Basis::S, lam.clone()), "{fam} {lam}");
            }
        }
        let so = schur_in_universal(&p("1"), Family::SoPlus).unwrap();
        assert_eq!(so, BTreeMap::from([(p("1"), 1), (p("-"), -1)]));
    }

    #[test]
    fn hamel_king_small() {
        let x2 = hamel_king(&p("2"), 1).unwrap();
        let want = SymFunc::from_terms(Basis::S, [(p("2"), QPoly::one()), (p("-"), QPoly::q())]);
        assert_eq!(x2, want);
        assert_eq!(hamel_king(&p("-"), -3).unwrap(), s_sum(&[("-", 1)]));
        for lam in Partition::up_to(5) {
            for z in -3..=3 {
                let q = QPoly::q();
                let d = hamel_king_det(&lam, z, &q, lam.len()).unwrap();
                assert_eq!(d, hamel_king_skew(&lam, z, &q), "{lam} z={z}");
                assert_eq!(d, hamel_king_det(&lam, z, &q, lam.len() + 2).unwrap());
            }
        }
    }

    #[test]
    fn koike_examples() {
        assert_eq!(rs(&p("-"), &p("-")).unwrap(), s_sum(&[("-", 1)]));
        assert_eq!(rs(&p("1"), &p("1")).unwrap(), s_sum(&[("2", 1), ("1,1", 1), ("-", -1)]));
        assert_eq!(rs(&p("2,1"), &p("-")).unwrap(), s_sum(&[("2,1", 1)]));
    }

    #[test]
    fn rs2_small_identities() {
        for (l, m) in [("2", "1"), ("1,1", "2"), ("3,2", "1,1"), ("2,1", "2,1")] {
            for a in -2..=2 {
                for b in -2..=2 {
                    for c in 0..=2 {
                        assert!(rs2_identity_holds(&p(l), &p(m), a, b, c).unwrap(), "{l} {m} {a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_six_by_six() {
        let (lam, mu) = (p("3,2"), p("4,2,1,1"));
        let u = QPoly::q();
        let v = QPoly::signed_monomial(1, 10);
        let prm = RsParams { a: -1, b: 2, c: 0, u: u.clone(), v: v.clone() };
        let one = QPoly::one();
        let x = |n: i64, c: &QPoly| h_term(n, c, |p| (p, Partition::empty()));
        let y = |n: i64, c: &QPoly| h_term(n, c, |p| (Partition::empty(), p));
        let z = LinComb::zero;
        let want = vec![
            vec![x(3, &one), x(4, &one), z(), x(2, &u), x(1, &u), x(0, &u)],
            vec![x(1, &one), x(2, &one), z(), x(0, &u), z(), z()],
            vec![y(1, &v), y(0, &v), y(4, &one), y(5, &one), y(6, &one), y(7, &one)],
            vec![z(), z(), y(1, &one), y(2, &one), y(3, &one), y(4, &one)],
            vec![z(), z(), z(), y(0, &one), y(1, &one), y(2, &one)],
            vec![z(), z(), z(), z(), y(0, &one), y(1, &one)],
        ];
        let got = rs_matrix(&lam, &mu, &prm, 2, 4, |p| (p, Partition::empty()), |q| (Partition::empty(), q));
        assert_eq!(got, want);
        let expansion = rs2_expand_h(&lam, &mu, &prm);
        assert_eq!(determinant(&want), expansion);
        let mut literal = want.clone();
        literal[0][1] = x(2, &one);
        assert_ne!(determinant(&literal), expansion);
        let nus: Vec<_> = rs_terms(&lam, &mu, -1, 2, 0).into_iter().map(|t| t.nu).collect();
        assert!(!nus.contains(&p("1")));
        assert!(nus.contains(&p("-")));
    }

    #[test]
    fn rs2_degenerate_window() {
        // c ≥ k: the left blocks have no columns.
        let prm = RsParams { a: 1, b: 0, c: 2, u: QPoly::q(), v: QPoly::signed_monomial(1, 9) };
        let m = rs_matrix(&p("1"), &p("1"), &prm, 1, 1, |x| (x, Partition::empty()), |y| (Partition::empty(), y));
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|row| row.len() == 3));
        assert!(rs2_identity_holds(&p("1"), &p("1"), 1, 0, 2).unwrap());
    }

    #[test]
    fn negative_c_swaps() {
        let q = QPoly::q();
        let a = rs_single(&p("2"), &p("1"), &RsParams::single(1, -1, &q)).unwrap();
        let b = rs_single(&p("1"), &p("2"), &RsParams::single(1, 1, &q)).unwrap();
        assert_eq!(a, b);
        assert!(rs2(&p("1"), &p("1"), &RsParams { c: -1, ..RsParams::koike() }).is_err());
    }

    #[test]
    fn koike_is_diagonal_of_rs2() {
        for (l, m) in [("2,1", "1"), ("1,1", "2"), ("3", "1,1")] {
            let two = rs2(&p(l), &p(m), &RsParams::koike()).unwrap();
            assert_eq!(two.diagonal().unwrap(), rs(&p(l), &p(m)).unwrap());
            assert_eq!(two, rs2_expansion(&p(l), &p(m), &RsParams::koike()).unwrap());
        }
    }

    #[test]
    fn factorization_examples() {
        let r = factor_verschiebung(&p("2"), 1, 2).unwrap();
        assert!(!r.vanishes);
        assert_eq!(r.kappa, vec![0, 0]);
        assert_eq!(r.mu_c, Some(p("-")));
        assert_eq!(r.epsilon, Some(Epsilon { sign: 1, power: 0 }));
        assert_eq!(
            r.factors,
            vec![Factor::Chi { part: p("-"), z: 1 }, Factor::Chi { part: p("1"), z: 0 }]
        );
        let want = SymFunc::from_terms(Basis::S, [(p("1"), QPoly::one()), (p("-"), QPoly::q())]);
        assert_eq!(r.expand().unwrap(), want);
        assert_eq!(r.direct().unwrap(), want);

        let so = factor_classical(&p("1"), 2, Family::SoPlus).unwrap();
        assert!(!so.vanishes);
        assert_eq!(so.expand().unwrap(), s_sum(&[("-", 1)]));
        assert!(so.verify().unwrap());
    }
}
