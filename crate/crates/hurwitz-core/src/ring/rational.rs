//! Arbitrary-precision rationals, the workhorse scalar of the crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::{NormedRing, QAlgebra, Ring};

/// Exact fraction of arbitrary-precision integers.
///
/// Always stored reduced with a positive denominator, so equality is
/// structural and `Display` output is canonical. The textual form is
/// `"p/q"`, or just `"p"` when the denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::from_integer(BigInt::from(1)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `p/q` from machine integers. Panics if `q` is zero.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `p/q` from big integers, reduced on construction. Panics if `q` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.0.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// Nearest 64-bit float; inexact in general, used only for reporting.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn integer_like(&self, n: &BigInt) -> Self {
        Rational::from_bigint(n.clone())
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-self.0.clone())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl NormedRing for Rational {
    /// Absolute value: multiplicative, so norm axiom 4 holds with equality.
    fn norm(&self) -> Rational {
        self.abs()
    }
}

impl QAlgebra for Rational {
    fn div_int(&self, n: &BigInt) -> Self {
        assert!(!n.is_zero(), "division by zero integer");
        Rational(&self.0 / BigRational::from_integer(n.clone()))
    }

    fn rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `"p"` or `"p/q"` with optional signs; the stored value is
/// reduced with positive denominator regardless of the input's form.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), Some(q.trim())),
            None => (s, None),
        };
        let numer: BigInt = num_str
            .parse()
            .map_err(|_| ParseRationalError(s.to_owned()))?;
        let denom: BigInt = match den_str {
            Some(q) => q.parse().map_err(|_| ParseRationalError(s.to_owned()))?,
            None => BigInt::from(1),
        };
        if denom.is_zero() {
            return Err(ParseRationalError(s.to_owned()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\" with q != 0)")]
pub struct ParseRationalError(pub String);

/// Serialized as the canonical string form, never as a JSON number.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}
