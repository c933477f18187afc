//! Majorant certification for flows over normed rings.
//!
//! If a nonnegative rational sequence (a_n) dominates the norms of a
//! derivative jet termwise, then applying the flow recursion to the
//! majorant sequence dominates the norms of the recursion's output
//! termwise: |A_n(jet)| <= A_n(majorant). The Bell structure constants
//! are nonnegative integers, so the domination survives every step of
//! the recursion; this module computes both sides exactly and certifies
//! the inequality per order.
//!
//! Three majorant families come with closed-form bound flows and a known
//! validity interval in t (they are the jet families of the
//! [`crate::closed_forms`] module read as rational sequences); explicit
//! sequences are also accepted, with no interval attached.

use serde::Serialize;

use crate::autonomous::{autonomous_operator, egf_weight};
use crate::closed_forms::falling_factorial;
use crate::error::CoreError;
use crate::ring::{NormedRing, Rational, Ring};
use crate::series::{factorial_rational, DerivativeJet};

/// The supported majorant sequences.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MajorantKind {
    /// a_n = a^n with a > 0; bound flow (1/a) log(1/(1 - a t)) on
    /// 0 <= t < 1/a.
    Power(Rational),
    /// a_n = n!; bound flow 1 - sqrt(1 - 2t) on 0 <= t < 1/2.
    Factorial,
    /// a_n = a(a-1)...(a-n+1) with a != 1; bound flow
    /// (1 + (1-a) t)^{1/(1-a)} - 1 on 0 <= t < 1.
    Binomial(Rational),
    /// A caller-supplied nonnegative sequence; no closed form attached.
    Explicit(Vec<Rational>),
}

/// Validated majorant choice. Construction enforces the parameter
/// constraints; producing values can still fail for a binomial parameter
/// whose falling factorials turn negative within the requested range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MajorantSpec {
    kind: MajorantKind,
}

impl MajorantSpec {
    pub fn power(a: Rational) -> Result<Self, CoreError> {
        if !a.is_positive() {
            return Err(CoreError::NonpositiveMajorantBase { got: Box::new(a) });
        }
        Ok(MajorantSpec {
            kind: MajorantKind::Power(a),
        })
    }

    pub fn factorial() -> Self {
        MajorantSpec {
            kind: MajorantKind::Factorial,
        }
    }

    pub fn binomial(a: Rational) -> Result<Self, CoreError> {
        if a == Rational::one() {
            return Err(CoreError::BinomialParameterOne);
        }
        Ok(MajorantSpec {
            kind: MajorantKind::Binomial(a),
        })
    }

    pub fn explicit(values: Vec<Rational>) -> Result<Self, CoreError> {
        for (index, value) in values.iter().enumerate() {
            if value.is_negative() {
                return Err(CoreError::NegativeMajorant {
                    index,
                    value: Box::new(value.clone()),
                });
            }
        }
        Ok(MajorantSpec {
            kind: MajorantKind::Explicit(values),
        })
    }

    pub fn kind(&self) -> &MajorantKind {
        &self.kind
    }

    /// Validity interval of the closed-form bound flow, if one is
    /// attached to this family.
    pub fn t_domain(&self) -> Option<String> {
        match &self.kind {
            MajorantKind::Power(a) => Some(format!("0 <= t < 1/a = {}", a.clone().recip())),
            MajorantKind::Factorial => Some("0 <= t < 1/2".to_owned()),
            MajorantKind::Binomial(_) => Some("0 <= t < 1".to_owned()),
            MajorantKind::Explicit(_) => None,
        }
    }

    /// Exclusive upper end of the validity interval, if any.
    fn t_limit(&self) -> Option<Rational> {
        match &self.kind {
            MajorantKind::Power(a) => Some(a.clone().recip()),
            MajorantKind::Factorial => Some(Rational::ratio(1, 2)),
            MajorantKind::Binomial(_) => Some(Rational::one()),
            MajorantKind::Explicit(_) => None,
        }
    }
}

/// Elementwise norms (|v_0|, |v_1|, ...) of a jet over a normed ring.
pub fn norm_jet<E: NormedRing>(jet: &DerivativeJet<E>) -> Vec<Rational> {
    jet.values().iter().map(NormedRing::norm).collect()
}

/// The majorant values (a_0, ..., a_N). Fails if any produced value is
/// negative (a binomial parameter outliving its falling factorials) or
/// if an explicit sequence is too short.
pub fn majorant_values(spec: &MajorantSpec, upto: usize) -> Result<Vec<Rational>, CoreError> {
    let values: Vec<Rational> = match &spec.kind {
        MajorantKind::Power(a) => (0..=upto).map(|n| a.pow(n as u64)).collect(),
        MajorantKind::Factorial => (0..=upto).map(factorial_rational).collect(),
        MajorantKind::Binomial(a) => (0..=upto).map(|n| falling_factorial(a, n)).collect(),
        MajorantKind::Explicit(seq) => {
            if seq.len() < upto + 1 {
                return Err(CoreError::TooFewCoefficients {
                    need: upto + 1,
                    got: seq.len(),
                });
            }
            seq[..=upto].to_vec()
        }
    };
    for (index, value) in values.iter().enumerate() {
        if value.is_negative() {
            return Err(CoreError::NegativeMajorant {
                index,
                value: Box::new(value.clone()),
            });
        }
    }
    Ok(values)
}

/// Result of a termwise comparison norms[n] <= majorant[n].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominationCheck {
    pub holds: bool,
    /// Smallest index with norms[n] > majorant[n], when any.
    pub first_violation: Option<usize>,
}

/// Checks norms[n] <= majorant[n] for all n; sequences must have equal
/// length.
pub fn check_domination(
    norms: &[Rational],
    majorant: &[Rational],
) -> Result<DominationCheck, CoreError> {
    if norms.len() != majorant.len() {
        return Err(CoreError::LengthMismatch {
            left: norms.len(),
            right: majorant.len(),
        });
    }
    let first_violation = norms
        .iter()
        .zip(majorant)
        .position(|(norm, bound)| norm > bound);
    Ok(DominationCheck {
        holds: first_violation.is_none(),
        first_violation,
    })
}

/// The flow recursion applied to a nonnegative rational sequence read as
/// a jet: (A_1(a_0), A_2(a_0, a_1), ...). Outputs are nonnegative because
/// every Bell structure constant is a nonnegative integer.
pub fn bound_series(majorant: &[Rational]) -> Result<Vec<Rational>, CoreError> {
    for (index, value) in majorant.iter().enumerate() {
        if value.is_negative() {
            return Err(CoreError::NegativeMajorant {
                index,
                value: Box::new(value.clone()),
            });
        }
    }
    let jet = DerivativeJet::new(majorant.to_vec())?;
    let bounds = autonomous_operator(&jet);
    debug_assert!(bounds.iter().all(|b| !b.is_negative()));
    Ok(bounds)
}

/// One certified order: |A_n(jet)| compared against A_n(majorant).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BoundCheck {
    pub n: usize,
    pub actual_norm: Rational,
    pub bound: Rational,
    pub holds: bool,
}

/// Outcome of certifying a jet against a majorant, order by order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CertificationReport {
    pub per_n: Vec<BoundCheck>,
    pub overall: bool,
    /// Validity interval of the closed-form bound flow, when the
    /// majorant family has one.
    pub t_domain: Option<String>,
}

/// Certifies |A_n(jet)| <= A_n(majorant) for n = 1..=len(jet).
///
/// The hypothesis |v_n| <= a_n is checked first; a violation is an error
/// (the input does not satisfy the majorant's premise), not a failed
/// certification.
pub fn certify<E: NormedRing>(
    jet: &DerivativeJet<E>,
    spec: &MajorantSpec,
) -> Result<CertificationReport, CoreError> {
    let norms = norm_jet(jet);
    let majorant = majorant_values(spec, jet.len() - 1)?;
    let hypothesis = check_domination(&norms, &majorant)?;
    if let Some(index) = hypothesis.first_violation {
        return Err(CoreError::HypothesisViolation {
            index,
            norm: Box::new(norms[index].clone()),
            bound: Box::new(majorant[index].clone()),
        });
    }
    let actual = autonomous_operator(jet);
    let bounds = bound_series(&majorant)?;
    let per_n: Vec<BoundCheck> = actual
        .iter()
        .zip(&bounds)
        .enumerate()
        .map(|(i, (a, bound))| {
            let actual_norm = a.norm();
            BoundCheck {
                n: i + 1,
                holds: actual_norm <= *bound,
                actual_norm,
                bound: bound.clone(),
            }
        })
        .collect();
    let overall = per_n.iter().all(|check| check.holds);
    Ok(CertificationReport {
        per_n,
        overall,
        t_domain: spec.t_domain(),
    })
}

/// The truncated bound flow sum_{n=1}^{N} A_n t^n / n! at a nonnegative
/// time, an exact rational upper bound for the truncated displacement
/// norm. When a closed-form majorant is attached, t must also lie inside
/// its validity interval.
pub fn bound_flow_eval(
    bound_coeffs: &[Rational],
    t: &Rational,
    spec: Option<&MajorantSpec>,
) -> Result<Rational, CoreError> {
    if t.is_negative() {
        return Err(CoreError::NegativeTime {
            t: Box::new(t.clone()),
        });
    }
    if let Some(limit) = spec.and_then(MajorantSpec::t_limit) {
        if *t >= limit {
            return Err(CoreError::TimeOutsideDomain {
                t: Box::new(t.clone()),
                domain: spec
                    .and_then(MajorantSpec::t_domain)
                    .unwrap_or_default(),
            });
        }
    }
    let mut acc = Rational::zero();
    for (i, coeff) in bound_coeffs.iter().enumerate() {
        acc = acc + coeff.clone() * egf_weight(t, i + 1);
    }
    Ok(acc)
}
