//! Dense univariate polynomials with exact rational coefficients.
//!
//! Every polynomial in this crate (toric f and g, the Adin h-polynomial, the
//! basis-change polynomials and shelling contributions) lives in [`Poly`].
//! Coefficients are stored in ascending order of degree and the vector never
//! ends in a zero, so the zero polynomial is the empty vector and equality is
//! structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` extended by zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// Convenience constructor for an exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The formal variable `x`.
    pub fn x() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I>(coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Poly::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `(x + a)^n`.
    pub fn linear_power(a: i64, n: usize) -> Self {
        let coeffs = (0..=n)
            .map(|l| {
                let c = binomial(n as i64, l as i64) * BigInt::from(a).pow((n - l) as u32);
                BigRational::from_integer(c)
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `[x^power] self`, zero beyond the degree.
    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Returns `p(x + 1)`.
    pub fn shift_up(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, slot) in out.iter_mut().enumerate().take(m + 1) {
                *slot += c * BigRational::from_integer(binomial(m as i64, l as i64));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Returns `x^n p(1/x)`; fails when `deg p > n`.
    pub fn mirror(&self, n: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > n {
                return Err(Error::MirrorOrder {
                    degree: deg,
                    order: n,
                });
            }
        }
        let coeffs = (0..=n).map(|l| self.coeff(n - l)).collect();
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Keeps the coefficients of `x^0 .. x^max_power`.
    pub fn truncate(&self, max_power: usize) -> Self {
        Poly::from_coeffs(self.coeffs.iter().take(max_power + 1).cloned().collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Integer coefficient vector, or an error naming the first fractional one.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(power, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        what: format!("coefficient of x^{power} is {c}"),
                    })
                }
            })
            .collect()
    }

    /// Coefficients as JSON: bare integers where possible, `"num/den"` strings otherwise.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(rational_to_json).collect())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let coeffs = items
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

pub(crate) fn rational_to_json(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Some(v) = c.to_integer().to_i64() {
            return Value::from(v);
        }
        return Value::String(c.to_integer().to_string());
    }
    Value::String(format!("{}/{}", c.numer(), c.denom()))
}

pub(crate) fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Poly {
    /// Ascending powers, unit coefficients elided: `2x^3 + 11x^4 + x^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            let body = if magnitude.is_integer() {
                magnitude.to_integer().to_string()
            } else if power == 0 {
                format!("{}/{}", magnitude.numer(), magnitude.denom())
            } else {
                format!("({}/{})", magnitude.numer(), magnitude.denom())
            };
            match power {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                    }
                    f.write_str("x")?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}
