//! Exact univariate polynomials over the rationals in the twist variable `n`.
//!
//! Coefficients are stored densely, lowest degree first, as reduced
//! [`BigRational`]s. The zero polynomial is the empty coefficient list, so
//! structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&int(t))
    }

    /// Canonical match key: `c0,c1,...` with each coefficient written as
    /// `num` when integral and `num/den` otherwise. The zero polynomial is "".
    pub fn key(&self) -> String {
        self.coeffs
            .iter()
            .map(render_rational)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_key(key: &str) -> Result<Self> {
        let key = key.trim();
        if key.is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = key
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        let poly = Self::from_coeffs(coeffs);
        // reject non-canonical spellings so keys stay a bijection
        if poly.key() != key {
            return Err(Error::Parse(format!(
                "non-canonical polynomial key {key:?}"
            )));
        }
        Ok(poly)
    }

    /// Human rendering in descending powers, e.g. `7/2 n^4 + 19/2 n^2 + 2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if abs.is_integer() {
                out.push_str(&format!("{}{mono}", abs.numer()));
            } else {
                out.push_str(&format!("{} {mono}", render_rational(&abs)));
            }
        }
        out
    }

    /// True when every value at an integer in `range` is an integer.
    pub fn is_integer_valued_on(&self, range: std::ops::RangeInclusive<i64>) -> bool {
        range.into_iter().all(|t| self.eval_int(t).is_integer())
    }
}

fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn parse_rational(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_bigint(s)?)),
        Some((n, d)) => {
            let d = parse_bigint(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_bigint(n)?, d))
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.to_text())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly { (&self).$m(&rhs) }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly { (&self).$m(rhs) }
        }
        impl $tr<RatPoly> for &RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Product for RatPoly {
    fn product<I: Iterator<Item = RatPoly>>(iter: I) -> Self {
        iter.fold(RatPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a RatPoly> for RatPoly {
    fn product<I: Iterator<Item = &'a RatPoly>>(iter: I) -> Self {
        iter.fold(RatPoly::one(), |acc, p| &acc * p)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs
            .iter()
            .map(|c| RationalJson {
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RationalJson>::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for c in raw {
            let num = parse_bigint(&c.num).map_err(D::Error::custom)?;
            let den = parse_bigint(&c.den).map_err(D::Error::custom)?;
            if !den.is_positive() {
                return Err(D::Error::custom("denominator must be positive"));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(RatPoly::from_coeffs(coeffs))
    }
}

/// An affine twist `n -> slope * n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearTwist {
    pub slope: i64,
    pub intercept: i64,
}

impl LinearTwist {
    pub fn new(slope: i64, intercept: i64) -> Self {
        LinearTwist { slope, intercept }
    }

    pub fn to_poly(self) -> RatPoly {
        RatPoly::from_ints(&[self.intercept, self.slope])
    }

    pub fn at(self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }
}

/// `chi(P^dim, O(t(n)))`, i.e. `binom(t(n) + dim, dim)` as a polynomial in `n`.
pub fn proj_space_chi(dim: i64, twist: LinearTwist) -> Result<RatPoly> {
    if dim < 0 {
        return Err(Error::NegativeDimension(dim));
    }
    let t = twist.to_poly();
    let mut acc = RatPoly::one();
    let mut factorial = BigInt::one();
    for i in 1..=dim {
        acc = &acc * &(&t + &RatPoly::constant(int(i)));
        factorial *= BigInt::from(i);
    }
    Ok(acc.scale(&Rational::new(BigInt::one(), factorial)))
}
