//! Univariate polynomials in q with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients of q^0, q^1, …; no trailing zeros, so zero is the empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// ±q^power.
    pub fn signed_monomial(sign: i32, power: usize) -> Self {
        Self::monomial(power, rat(sign as i64))
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero (power, coefficient) pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_int(&self, n: i64) -> QPoly {
        self.scale(&rat(n))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// p(s·q).
    pub fn rescale_q(&self, s: &Rational) -> QPoly {
        let mut f = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &f);
            f *= s;
        }
        QPoly::from_coeffs(out)
    }

    /// p(r(q)): substitute a polynomial for q.
    pub fn compose(&self, r: &QPoly) -> QPoly {
        self.coeffs.iter().rev().fold(QPoly::zero(), |acc, c| &(&acc * r) + &QPoly::constant(c.clone()))
    }

    pub fn pow(&self, k: usize) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient self / d, or `None` if d does not divide self.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let dd = d.degree()?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(QPoly::zero()) } else { None };
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(QPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// (sign, power) when the polynomial is ±q^power.
    pub fn as_signed_monomial(&self) -> Option<(i32, usize)> {
        let mut it = self.terms();
        let (k, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        if c.is_one() {
            Some((1, k))
        } else if (-c).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl From<i64> for QPoly {
    fn from(n: i64) -> Self {
        QPoly::int(n)
    }
}

impl From<Rational> for QPoly {
    fn from(c: Rational) -> Self {
        QPoly::constant(c)
    }
}

impl fmt::Display for QPoly {
    /// Highest power first, e.g. `2*q^2 - q + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&var)?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = QPoly::q();
        let one = QPoly::one();
        let a = &q + &one;
        let b = &q - &one;
        assert_eq!(&a * &b, &(&q * &q) - &one);
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval(&rat(2)), rat(3));
        assert_eq!(a.rescale_q(&rat(-1)), &one - &q);
    }

    #[test]
    fn display() {
        let p = QPoly::from_coeffs(vec![ratio(1, 2), rat(-1), rat(2)]);
        assert_eq!(p.to_string(), "2*q^2 - q + 1/2");
        assert_eq!(QPoly::signed_monomial(-1, 0).to_string(), "-1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn monomials() {
        assert_eq!(QPoly::signed_monomial(-1, 3).as_signed_monomial(), Some((-1, 3)));
        assert_eq!((&QPoly::q() + &QPoly::one()).as_signed_monomial(), None);
        assert_eq!(QPoly::q().pow(3), QPoly::monomial(3, rat(1)));
    }
}
