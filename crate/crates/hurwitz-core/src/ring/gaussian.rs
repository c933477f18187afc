//! Gaussian rationals Q(i), the demonstration normed integral domain.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::{NormedRing, QAlgebra, Rational, Ring};

/// A Gaussian rational `re + im*i`.
///
/// The norm is the 1-norm `|re| + |im|`, which is rational-valued and
/// submultiplicative; the Euclidean modulus would be irrational for most
/// elements and is not used anywhere. Serialized as the pair
/// `["re", "im"]` in the rational string form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn zero() -> Self {
        GaussianRational::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_rational(Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }
}

impl Ring for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }

    fn one_like(&self) -> Self {
        GaussianRational::one()
    }

    fn integer_like(&self, n: &BigInt) -> Self {
        GaussianRational::from_rational(Rational::from_bigint(n.clone()))
    }

    fn add(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: Ring::add(&self.re, &rhs.re),
            im: Ring::add(&self.im, &rhs.im),
        }
    }

    fn neg(&self) -> Self {
        GaussianRational {
            re: Ring::neg(&self.re),
            im: Ring::neg(&self.im),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        let ac = Ring::mul(&self.re, &rhs.re);
        let bd = Ring::mul(&self.im, &rhs.im);
        let ad = Ring::mul(&self.re, &rhs.im);
        let bc = Ring::mul(&self.im, &rhs.re);
        GaussianRational {
            re: Ring::sub(&ac, &bd),
            im: Ring::add(&ad, &bc),
        }
    }

    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
}

impl NormedRing for GaussianRational {
    /// 1-norm `|re| + |im|`. Submultiplicative, possibly strictly:
    /// `(1+i)^2 = 2i` has norm 2 while `|1+i|^2 = 4`.
    fn norm(&self) -> Rational {
        self.re.abs() + self.im.abs()
    }
}

impl QAlgebra for GaussianRational {
    fn div_int(&self, n: &BigInt) -> Self {
        GaussianRational {
            re: self.re.div_int(n),
            im: self.im.div_int(n),
        }
    }

    fn rational_like(&self, q: &Rational) -> Self {
        GaussianRational::from_rational(q.clone())
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        Ring::add(&self, &rhs)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        Ring::sub(&self, &rhs)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        Ring::mul(&self, &rhs)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        Ring::neg(&self)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Ring::is_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        if Ring::is_zero(&self.re) {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form `["re", "im"]`.
impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [&self.re, &self.im].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = <Vec<String>>::deserialize(deserializer)?;
        if parts.len() != 2 {
            return Err(D::Error::custom(format!(
                "expected [re, im] pair, got {} entries",
                parts.len()
            )));
        }
        let re = parts[0].parse().map_err(D::Error::custom)?;
        let im = parts[1].parse().map_err(D::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_int(re), Rational::from_int(im))
    }

    #[test]
    fn one_norm() {
        assert_eq!(g(3, 4).norm(), Rational::from_int(7));
        assert_eq!(g(0, 0).norm(), Rational::zero());
        assert_eq!(
            GaussianRational::new(Rational::ratio(3, 1), Rational::ratio(0, 1)).norm(),
            Rational::from_int(3)
        );
    }

    #[test]
    fn strict_submultiplicativity_witness() {
        // (1+i)^2 = 2i: norm 2 < 4 = norm(1+i)^2
        let z = g(1, 1);
        let sq = z.clone() * z.clone();
        assert_eq!(sq, g(0, 2));
        assert_eq!(sq.norm(), Rational::from_int(2));
        assert_eq!(z.norm().clone() * z.norm(), Rational::from_int(4));
    }

    #[test]
    fn integral_domain_product() {
        // (1+i)(1-i) = 2
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(g(2, 0).to_string(), "2");
        assert_eq!(g(0, 1).to_string(), "1i");
        assert_eq!(g(3, -2).to_string(), "3-2i");
        assert_eq!(
            GaussianRational::new(Rational::ratio(1, 2), Rational::ratio(-1, 4)).to_string(),
            "1/2-1/4i"
        );
    }

    #[test]
    fn serde_pair_round_trip() {
        let z = GaussianRational::new(Rational::ratio(1, 2), Rational::ratio(-3, 4));
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, "[\"1/2\",\"-3/4\"]");
        let back: GaussianRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<GaussianRational>("[\"1\"]").is_err());
        assert!(serde_json::from_str::<GaussianRational>("[\"1\",\"2\",\"3\"]").is_err());
    }
}
