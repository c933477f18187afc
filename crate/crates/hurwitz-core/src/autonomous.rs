//! The autonomous operator and truncated flows.
//!
//! Given the derivative jet (f, delta f, ..., delta^{m-1} f) of the right
//! hand side of y' = f(y), the operator produces the successive
//! t-derivatives A_1, ..., A_m of the solution through the recursion
//!
//! ```text
//! A_1 = f,    A_{n+1} = Y_n(A_1, ..., A_n; delta f, ..., delta^n f),
//! ```
//!
//! where Y_n is the complete Bell polynomial. The recursion only uses
//! ring operations, so it is implemented once over [`Ring`] and
//! instantiated with scalars (jets evaluated at a point) or with
//! truncated series (symbolic jets in the space variable).

use crate::bell::complete_bell;
use crate::error::CoreError;
use crate::ring::{QAlgebra, Rational, Ring};
use crate::series::{factorial_rational, DerivativeJet, HurwitzSeries};

/// Applies the flow recursion to a jet of length m and returns
/// (A_1, ..., A_m).
///
/// The jet is trusted to consist of the derivatives of one function at
/// one point; that claim is not checkable from the values themselves.
pub fn autonomous_operator<E: Ring>(jet: &DerivativeJet<E>) -> Vec<E> {
    let values = jet.values();
    let mut a_coeffs: Vec<E> = Vec::with_capacity(values.len());
    a_coeffs.push(values[0].clone());
    for n in 1..values.len() {
        let next = complete_bell(n, &a_coeffs[..n], &values[1..=n])
            .expect("recursion slices are nonempty and of matching length");
        a_coeffs.push(next);
    }
    a_coeffs
}

/// Truncated flow x + sum A_n t^n / n! of an autonomous equation with
/// initial condition x.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlowSeries<E> {
    base: E,
    a_coeffs: Vec<E>,
}

impl<E: Ring> FlowSeries<E> {
    /// Assembles a flow from precomputed t-derivative coefficients.
    pub fn from_parts(base: E, a_coeffs: Vec<E>) -> Result<Self, CoreError> {
        if a_coeffs.is_empty() {
            return Err(CoreError::EmptyJet);
        }
        Ok(FlowSeries { base, a_coeffs })
    }

    /// Initial condition x.
    pub fn base(&self) -> &E {
        &self.base
    }

    /// Number of stored t-derivatives.
    pub fn order(&self) -> usize {
        self.a_coeffs.len()
    }

    /// The coefficients (A_1, ..., A_N).
    pub fn coeffs(&self) -> &[E] {
        &self.a_coeffs
    }

    /// The displacement Phi - x as a t-series: coefficients
    /// (0, A_1, ..., A_N), order N.
    pub fn displacement(&self) -> HurwitzSeries<E> {
        let mut coeffs = Vec::with_capacity(self.a_coeffs.len() + 1);
        coeffs.push(self.base.zero_like());
        coeffs.extend(self.a_coeffs.iter().cloned());
        HurwitzSeries::new(coeffs).expect("coefficient list is nonempty")
    }
}

impl<E: QAlgebra> FlowSeries<E> {
    /// Exact evaluation x + sum_{n=1}^{N} A_n t^n / n! of the truncation.
    pub fn eval(&self, t: &Rational) -> E {
        let mut acc = self.base.clone();
        let mut weight = Rational::one();
        for (n, a_n) in self.a_coeffs.iter().enumerate() {
            // weight = t^{n+1} / (n+1)!
            weight = weight * t.clone() / Rational::from_int((n + 1) as i64);
            acc = acc.add(&a_n.mul(&a_n.rational_like(&weight)));
        }
        acc
    }

    /// Pointwise evaluation over a list of times.
    pub fn trajectory(&self, t_values: &[Rational]) -> TrajectorySample<E> {
        TrajectorySample {
            points: t_values.iter().map(|t| self.eval(t)).collect(),
            t_values: t_values.to_vec(),
        }
    }
}

/// Sampled trajectory: evaluation times and the matching flow values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrajectorySample<E> {
    pub t_values: Vec<Rational>,
    pub points: Vec<E>,
}

/// Flow with initial condition `base` from the jet of f at that point.
pub fn flow_series<E: Ring>(base: E, jet: &DerivativeJet<E>) -> FlowSeries<E> {
    FlowSeries {
        base,
        a_coeffs: autonomous_operator(jet),
    }
}

/// Symbolic flow: the recursion instantiated over the ring of truncated
/// series, so the coefficients A_n are series in the space variable x.
///
/// `depth` is the number of t-derivatives to produce; it needs the jet
/// (f, ..., delta^{depth-1} f), whose entries have shrinking orders. The
/// ring arithmetic demands one uniform order, so every entry is truncated
/// to the smallest one, order(f) - depth + 1; nothing is invented, the
/// deeper coefficients are only dropped. The initial condition is the
/// series x at that same order, which is why `depth <= order(f)` is
/// required rather than `depth - 1`.
pub fn flow_symbolic<E: Ring>(
    f: &HurwitzSeries<E>,
    depth: usize,
) -> Result<FlowSeries<HurwitzSeries<E>>, CoreError> {
    if depth == 0 {
        return Err(CoreError::EmptyJet);
    }
    if depth > f.order() {
        return Err(CoreError::DepthExceedsOrder {
            depth,
            order: f.order(),
        });
    }
    let expansion = f.hurwitz_expansion(depth - 1)?;
    let common_order = f.order() - (depth - 1);
    let uniform: Vec<HurwitzSeries<E>> = expansion
        .values()
        .iter()
        .map(|s| s.truncated(common_order))
        .collect::<Result<_, _>>()?;
    let jet = DerivativeJet::new(uniform)?;
    let base = HurwitzSeries::variable(f.coeff(0), common_order);
    Ok(FlowSeries {
        base,
        a_coeffs: autonomous_operator(&jet),
    })
}

/// t^n / n! weights for bound evaluation; shared with the majorant module.
pub(crate) fn egf_weight(t: &Rational, n: usize) -> Rational {
    t.pow(n as u64) / factorial_rational(n)
}
