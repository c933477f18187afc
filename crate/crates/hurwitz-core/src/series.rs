//! Truncated Hurwitz series: exponential generating functions stored by
//! derivative coefficients, with the binomial convolution product.
//!
//! A series of order N stores (a_0, ..., a_N) representing
//! sum a_n x^n / n!. The derivative delta is the left shift, so it reduces
//! the order by one instead of padding with an invented coefficient: a jet
//! of depth d therefore needs input order >= d.
//!
//! Arithmetic between series demands equal truncation orders. The checked
//! entry points ([`HurwitzSeries::checked_add`], [`HurwitzSeries::checked_mul`])
//! report a mismatch as an error; the [`Ring`] implementation, which the
//! generic algorithms use internally on uniformly-truncated operands,
//! panics on mismatch because reaching it indicates a bug, not bad input.

use num_bigint::{BigInt, BigUint};

use crate::combinatorics::{factorial, pascal_rows};
use crate::error::CoreError;
use crate::ring::{NormedRing, QAlgebra, Rational, Ring};

/// Truncated exponential generating function sum a_n x^n / n!.
///
/// The coefficient ring is the type parameter; series over different rings
/// are different types, so mixed-ring arithmetic is impossible by
/// construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HurwitzSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Ring> HurwitzSeries<E> {
    /// Series from derivative coefficients (a_0, ..., a_N).
    pub fn new(coeffs: Vec<E>) -> Result<Self, CoreError> {
        if coeffs.is_empty() {
            return Err(CoreError::EmptySeries);
        }
        Ok(HurwitzSeries { coeffs })
    }

    /// The constant series (c, 0, ..., 0) at the given order.
    pub fn constant(value: E, order: usize) -> Self {
        let zero = value.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = value;
        HurwitzSeries { coeffs }
    }

    /// The zero series at the given order, shaped like `witness`.
    pub fn zero(witness: &E, order: usize) -> Self {
        HurwitzSeries {
            coeffs: vec![witness.zero_like(); order + 1],
        }
    }

    /// The series x, i.e. coefficients (0, 1, 0, ..., 0). Panics if
    /// `order` is 0: an order-0 truncation cannot hold x.
    pub fn variable(witness: &E, order: usize) -> Self {
        assert!(order >= 1, "the series x needs order >= 1");
        let mut coeffs = vec![witness.zero_like(); order + 1];
        coeffs[1] = witness.one_like();
        HurwitzSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient a_n. Panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &E {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Coefficientwise sum; the orders must agree.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.require_same_order(rhs)?;
        Ok(self.add_raw(rhs))
    }

    /// Truncated Hurwitz product; the orders must agree. The nth
    /// coefficient is sum_{k=0}^{n} C(n,k) a_k b_{n-k}.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.require_same_order(rhs)?;
        Ok(self.mul_raw(rhs))
    }

    /// The derivative: left shift, order N-1. Rejects order-0 input since
    /// the result would have no coefficients at all.
    pub fn delta(&self) -> Result<Self, CoreError> {
        if self.order() == 0 {
            return Err(CoreError::DerivativeOfOrderZero);
        }
        Ok(HurwitzSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// The jet (f, delta f, ..., delta^depth f); delta^k f has order N-k.
    pub fn hurwitz_expansion(&self, depth: usize) -> Result<DerivativeJet<Self>, CoreError> {
        if depth > self.order() {
            return Err(CoreError::DepthExceedsOrder {
                depth,
                order: self.order(),
            });
        }
        let mut values = Vec::with_capacity(depth + 1);
        let mut current = self.clone();
        values.push(current.clone());
        for _ in 0..depth {
            current = current.delta()?;
            values.push(current.clone());
        }
        DerivativeJet::new(values)
    }

    /// Drop coefficients beyond `order`. Never invents coefficients:
    /// raising the order is an error.
    pub fn truncated(&self, order: usize) -> Result<Self, CoreError> {
        if order > self.order() {
            return Err(CoreError::TruncationBeyondOrder {
                requested: order,
                current: self.order(),
            });
        }
        Ok(HurwitzSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Multiply every coefficient by a scalar of the coefficient ring.
    pub fn scale(&self, s: &E) -> Self {
        HurwitzSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    fn require_same_order(&self, rhs: &Self) -> Result<(), CoreError> {
        if self.order() != rhs.order() {
            return Err(CoreError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    fn add_raw(&self, rhs: &Self) -> Self {
        HurwitzSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn mul_raw(&self, rhs: &Self) -> Self {
        let order = self.order();
        let witness = &self.coeffs[0];
        let binomials = pascal_rows(order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for (n, row) in binomials.iter().enumerate() {
            let mut acc = witness.zero_like();
            for (k, c_nk) in row.iter().enumerate() {
                let term = self.coeffs[k].mul(&rhs.coeffs[n - k]);
                acc = acc.add(&term.mul(&witness.integer_like(&big_int(c_nk))));
            }
            coeffs.push(acc);
        }
        HurwitzSeries { coeffs }
    }
}

impl<E: QAlgebra> HurwitzSeries<E> {
    /// Exact evaluation of the truncation: sum_{n=0}^{N} a_n c^n / n!.
    ///
    /// Defined for any `c`; the hypothesis |c| <= 1 belongs to the norm
    /// bound machinery, not to evaluation of a finite sum.
    pub fn evaluate(&self, c: &E) -> E {
        let mut acc = self.coeffs[0].clone();
        let mut c_power = c.one_like();
        let mut n_factorial = BigInt::from(1);
        for (n, a_n) in self.coeffs.iter().enumerate().skip(1) {
            c_power = c_power.mul(c);
            n_factorial *= n as i64;
            acc = acc.add(&a_n.mul(&c_power).div_int(&n_factorial));
        }
        acc
    }
}

impl<E: NormedRing + QAlgebra> HurwitzSeries<E> {
    /// max_{0 <= n <= N} |a_n / n!|, the truncated version of the norm on
    /// convergent exponential series. Over a truncation this is a lower
    /// bound of the true sup over all n.
    ///
    /// `c_norm` is the norm of the intended evaluation point; the
    /// evaluation maps behind the bound require |c| <= 1, so anything
    /// larger (or negative, which is no norm at all) is rejected.
    pub fn tail_norm_bound(&self, c_norm: &Rational) -> Result<Rational, CoreError> {
        if c_norm.is_negative() || *c_norm > Rational::one() {
            return Err(CoreError::EvaluationNormTooLarge {
                got: Box::new(c_norm.clone()),
            });
        }
        let mut n_factorial = BigInt::from(1);
        let mut best = self.coeffs[0].norm();
        for (n, a_n) in self.coeffs.iter().enumerate().skip(1) {
            n_factorial *= n as i64;
            let value = a_n.div_int(&n_factorial).norm();
            if value > best {
                best = value;
            }
        }
        Ok(best)
    }
}

fn big_int(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

/// Truncated series over a ring form a ring at fixed order. These
/// operations panic on an order mismatch; external inputs go through the
/// checked methods instead.
impl<E: Ring> Ring for HurwitzSeries<E> {
    fn zero_like(&self) -> Self {
        HurwitzSeries::zero(&self.coeffs[0], self.order())
    }

    fn one_like(&self) -> Self {
        HurwitzSeries::constant(self.coeffs[0].one_like(), self.order())
    }

    fn integer_like(&self, n: &BigInt) -> Self {
        HurwitzSeries::constant(self.coeffs[0].integer_like(n), self.order())
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series ring arithmetic requires uniform truncation orders"
        );
        self.add_raw(rhs)
    }

    fn neg(&self) -> Self {
        HurwitzSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series ring arithmetic requires uniform truncation orders"
        );
        self.mul_raw(rhs)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl<E: QAlgebra> QAlgebra for HurwitzSeries<E> {
    fn div_int(&self, n: &BigInt) -> Self {
        HurwitzSeries {
            coeffs: self.coeffs.iter().map(|c| c.div_int(n)).collect(),
        }
    }

    fn rational_like(&self, q: &Rational) -> Self {
        HurwitzSeries::constant(self.coeffs[0].rational_like(q), self.order())
    }
}

/// Finite vector of derivative values (v_0, ..., v_m): either scalars
/// (the derivatives of f evaluated at a point) or series (the Hurwitz
/// expansion itself). Never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivativeJet<E> {
    values: Vec<E>,
}

impl<E> DerivativeJet<E> {
    pub fn new(values: Vec<E>) -> Result<Self, CoreError> {
        if values.is_empty() {
            return Err(CoreError::EmptyJet);
        }
        Ok(DerivativeJet { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: construction rejects empty jets.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[E] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &E {
        &self.values[k]
    }

    /// The jet of the first `len` values.
    pub fn prefix(&self, len: usize) -> Result<Self, CoreError>
    where
        E: Clone,
    {
        if len == 0 {
            return Err(CoreError::EmptyJet);
        }
        if len > self.values.len() {
            return Err(CoreError::TooFewCoefficients {
                need: len,
                got: self.values.len(),
            });
        }
        Ok(DerivativeJet {
            values: self.values[..len].to_vec(),
        })
    }
}

/// n! as a rational, convenience for evaluation formulas.
pub(crate) fn factorial_rational(n: usize) -> Rational {
    Rational::from_bigint(BigInt::from(factorial(n)))
}
