//! Coefficient rings: the abstract ring contracts and two exact instances.
//!
//! - [`Ring`]: commutative ring with identity, the contract every algorithm
//!   in this crate is written against
//! - [`NormedRing`]: adds a nonnegative rational-valued norm
//! - [`QAlgebra`]: adds exact division by nonzero integers (equivalently,
//!   the ring contains the rationals)
//! - [`Rational`]: arbitrary-precision fraction, always stored reduced
//! - [`GaussianRational`]: pair (re, im) of rationals with the 1-norm
//!
//! Elements may carry structure a bare type cannot express (a truncated
//! series carries its order), so the identity constructors are witness
//! based: `x.zero_like()` is the zero with the same shape as `x`.

mod gaussian;
mod rational;

pub use gaussian::GaussianRational;
pub use rational::Rational;

use num_bigint::BigInt;

/// Commutative ring with identity. All operations are total and exact.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    /// Additive identity with the same shape as `self`.
    fn zero_like(&self) -> Self;

    /// Multiplicative identity with the same shape as `self`.
    fn one_like(&self) -> Self;

    /// Canonical image of an integer under Z -> R, shaped like `self`.
    fn integer_like(&self, n: &BigInt) -> Self;

    fn add(&self, rhs: &Self) -> Self;

    fn neg(&self) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_zero(&self) -> bool {
        *self == self.zero_like()
    }

    /// Nonnegative integer power by repeated squaring; `pow(0)` is one.
    fn pow(&self, exp: u64) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// Ring equipped with a norm into the nonnegative rationals satisfying
///
/// 1. |x| = 0 iff x = 0
/// 2. |x + y| <= |x| + |y|
/// 3. |-x| = |x|
/// 4. |x y| <= |x| |y|
///
/// Both provided instances happen to satisfy |1| = 1, but nothing in this
/// crate relies on it.
pub trait NormedRing: Ring {
    fn norm(&self) -> Rational;
}

/// Ring containing the rationals, i.e. with exact division by nonzero
/// integers. Truncated-series evaluation (the terms a_n c^n / n!) is only
/// available over such rings.
pub trait QAlgebra: Ring {
    /// Exact division by a nonzero integer.
    ///
    /// Panics if `n` is zero; no factorial or binomial denominator in this
    /// crate is ever zero.
    fn div_int(&self, n: &BigInt) -> Self;

    /// Canonical image of a rational under Q -> R, shaped like `self`.
    fn rational_like(&self, q: &Rational) -> Self;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_by_squaring_matches_repeated_multiplication() {
        let x = Rational::ratio(2, 3);
        let mut expected = x.one_like();
        for exp in 0..12u64 {
            assert_eq!(x.pow(exp), expected);
            expected = expected.mul(&x);
        }
    }

    #[test]
    fn pow_zero_is_one() {
        // (2/3)^0 = 1, the empty product
        assert_eq!(Rational::ratio(2, 3).pow(0), Rational::one());
        assert_eq!(Rational::zero().pow(0), Rational::one());
    }

    #[test]
    fn gaussian_pow() {
        // (1+i)^2 = 2i
        let z = GaussianRational::new(Rational::one(), Rational::one());
        let sq = z.pow(2);
        assert_eq!(sq, GaussianRational::new(Rational::zero(), Rational::from_int(2)));
    }
}
