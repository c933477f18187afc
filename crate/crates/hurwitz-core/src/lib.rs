//! Exact arithmetic for truncated flows of autonomous equations over
//! coefficient rings.
//!
//! The crate computes, entirely in exact arithmetic:
//!
//! - integer partitions and partial/complete Bell polynomials ([`bell`])
//! - truncated Hurwitz series (exponential generating functions stored by
//!   derivative coefficients) with the binomial convolution ([`series`])
//! - the flow recursion A_1 = f, A_{n+1} = Y_n(A_1..A_n; delta f..delta^n f)
//!   for y' = f(y), over scalars or over series ([`autonomous`])
//! - three jet families whose flows have closed forms, as independent
//!   oracles for the recursion ([`closed_forms`])
//! - per-order majorant certificates |A_n(jet)| <= A_n(majorant) over
//!   normed rings ([`majorant`])
//!
//! Coefficients live in any [`ring::Ring`]; the provided instances are
//! arbitrary-precision rationals and Gaussian rationals. There is no
//! floating-point ring: floats appear only in explicitly inexact
//! reporting helpers.

pub mod autonomous;
pub mod bell;
mod combinatorics;
pub mod closed_forms;
pub mod error;
pub mod json;
pub mod majorant;
pub mod ring;
pub mod series;

pub use autonomous::{autonomous_operator, flow_series, flow_symbolic, FlowSeries, TrajectorySample};
pub use bell::{complete_bell, compose_egf, enumerate_partitions, partial_bell, Partition};
pub use closed_forms::{
    falling_factorial, family_flow, image_of_family, jet_of_family, pochhammer_rising,
    rational_binomial, ClosedFormFlow, FamilyKind, FamilySpec,
};
pub use error::CoreError;
pub use majorant::{
    bound_flow_eval, bound_series, certify, check_domination, majorant_values, norm_jet,
    BoundCheck, CertificationReport, DominationCheck, MajorantKind, MajorantSpec,
};
pub use ring::{GaussianRational, NormedRing, QAlgebra, Rational, Ring};
pub use series::{DerivativeJet, HurwitzSeries};
