//! The three jet families with closed-form flows, used as exact oracles
//! for the recursion.
//!
//! | family        | right hand side | jet at 0            | image A_n                          | flow from 0                         |
//! |---------------|-----------------|---------------------|------------------------------------|-------------------------------------|
//! | Exponential(a)| e^{a y}         | a^n                 | a^{n-1} (n-1)!                     | (1/a) log(1/(1 - a t))              |
//! | Geometric     | 1/(1 - y)       | n!                  | (-1)^{n+1} 2^n C(1/2, n) n!        | 1 - sqrt(1 - 2 t)                   |
//! | Binomial(a)   | (1 + y)^a       | a(a-1)...(a-n+1)    | C(1/(1-a), n) (1-a)^n n!           | (1 + (1-a) t)^{1/(1-a)} - 1         |
//!
//! The binomial jet uses the falling factorial: that is what the
//! derivatives of (1+y)^a at 0 actually are, and the only choice under
//! which the stated image formula is an identity (the rising factorial,
//! often also written (a)_n, makes it false; `pochhammer_rising` is
//! provided separately). Binomial requires a != 1 because the closed
//! forms divide by 1 - a.

use crate::autonomous::FlowSeries;
use crate::error::CoreError;
use crate::ring::{Rational, Ring};
use crate::series::{factorial_rational, DerivativeJet};

/// Which of the three closed-form families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// e^{a y}; a = 0 degenerates to the flow t, which is allowed.
    Exponential(Rational),
    /// 1/(1 - y).
    Geometric,
    /// (1 + y)^a with a != 1.
    Binomial(Rational),
}

/// A family together with the truncation order N: jets carry N+1 values
/// (v_0, ..., v_N), image sequences carry N values (A_1, ..., A_N).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    kind: FamilyKind,
    order: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, order: usize) -> Result<Self, CoreError> {
        if let FamilyKind::Binomial(a) = &kind {
            if *a == Rational::one() {
                return Err(CoreError::BinomialParameterOne);
            }
        }
        Ok(FamilySpec { kind, order })
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// Generalized binomial coefficient C(q, n) = q(q-1)...(q-n+1) / n!.
pub fn rational_binomial(q: &Rational, n: usize) -> Rational {
    falling_factorial(q, n) / factorial_rational(n)
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
pub fn pochhammer_rising(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc = acc * (a.clone() + Rational::from_int(k as i64));
    }
    acc
}

/// Falling factorial a(a-1)...(a-n+1), with the empty product 1 at n = 0.
pub fn falling_factorial(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc = acc * (a.clone() - Rational::from_int(k as i64));
    }
    acc
}

/// The derivative jet (v_0, ..., v_N) of the family's right hand side
/// at 0.
pub fn jet_of_family(spec: &FamilySpec) -> DerivativeJet<Rational> {
    let values = (0..=spec.order)
        .map(|n| match &spec.kind {
            FamilyKind::Exponential(a) => a.pow(n as u64),
            FamilyKind::Geometric => factorial_rational(n),
            FamilyKind::Binomial(a) => falling_factorial(a, n),
        })
        .collect();
    DerivativeJet::new(values).expect("order + 1 >= 1 values")
}

/// The closed-form image (A_1, ..., A_N) of the family under the flow
/// recursion, computed directly with no recursion involved.
pub fn image_of_family(spec: &FamilySpec) -> Vec<Rational> {
    (1..=spec.order)
        .map(|n| match &spec.kind {
            FamilyKind::Exponential(a) => a.pow((n - 1) as u64) * factorial_rational(n - 1),
            FamilyKind::Geometric => {
                let sign = if n % 2 == 0 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                sign * Rational::from_int(2).pow(n as u64)
                    * rational_binomial(&Rational::ratio(1, 2), n)
                    * factorial_rational(n)
            }
            FamilyKind::Binomial(a) => {
                let one_minus_a = Rational::one() - a.clone();
                rational_binomial(&one_minus_a.recip(), n)
                    * one_minus_a.pow(n as u64)
                    * factorial_rational(n)
            }
        })
        .collect()
}

/// A truncated flow from base 0 with its closed-form description.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedFormFlow {
    pub flow: FlowSeries<Rational>,
    /// Human-readable closed form of the full (untruncated) flow.
    pub label: String,
}

/// The flow of the family from initial condition 0, with coefficients
/// taken from the closed-form image sequence.
pub fn family_flow(spec: &FamilySpec) -> ClosedFormFlow {
    let label = match &spec.kind {
        FamilyKind::Exponential(a) if a.is_zero() => "t".to_owned(),
        FamilyKind::Exponential(a) => {
            format!("(1/a)*log(1/(1 - a*t)) with a = {a}")
        }
        FamilyKind::Geometric => "1 - sqrt(1 - 2*t)".to_owned(),
        FamilyKind::Binomial(a) => {
            format!("(1 + (1-a)*t)^(1/(1-a)) - 1 with a = {a}")
        }
    };
    let flow = FlowSeries::from_parts(Rational::zero(), image_of_family(spec))
        .expect("image sequences are nonempty for order >= 1");
    ClosedFormFlow { flow, label }
}

/// 64-bit float value of the family's closed-form flow at time `t`.
/// Inexact by nature; used for sanity layers, never for certification.
pub fn closed_form_f64(spec: &FamilySpec, t: f64) -> f64 {
    match &spec.kind {
        FamilyKind::Exponential(a) if a.is_zero() => t,
        FamilyKind::Exponential(a) => {
            let a = a.to_f64();
            (1.0 / a) * (1.0 / (1.0 - a * t)).ln()
        }
        FamilyKind::Geometric => 1.0 - (1.0 - 2.0 * t).sqrt(),
        FamilyKind::Binomial(a) => {
            let a = a.to_f64();
            (1.0 + (1.0 - a) * t).powf(1.0 / (1.0 - a)) - 1.0
        }
    }
}
