//! Error type shared by all modules of the crate.

use thiserror::Error;

use crate::ring::Rational;

/// Errors reported by the exact-arithmetic operations.
///
/// Every variant corresponds to a rejected input; the library never
/// produces an approximate result in place of an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// Partitions of n = 0 into positive parts do not exist.
    #[error("n must be positive: there are no partitions of 0 into positive parts")]
    ZeroPartitionTarget,

    /// Requested part count outside 1..=n.
    #[error("part count {parts} is outside 1..={n}")]
    PartsOutOfRange { n: usize, parts: usize },

    /// Partial Bell polynomial index k outside 1..=n.
    #[error("Bell polynomial index k = {k} is outside 1..={n}")]
    BellIndexOutOfRange { n: usize, k: usize },

    /// A coefficient list is shorter than the operation requires.
    #[error("coefficient list has {got} entries, at least {need} are required")]
    TooFewCoefficients { need: usize, got: usize },

    /// Binary series operation on operands of different truncation orders.
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Composition f(g) requires the inner series to have zero constant term.
    #[error("composition requires the inner series to have zero constant term")]
    NonzeroConstantTerm,

    /// A truncated series must store at least the constant coefficient.
    #[error("a series needs at least one coefficient")]
    EmptySeries,

    /// A derivative jet must contain at least the 0th derivative.
    #[error("a derivative jet needs at least one value")]
    EmptyJet,

    /// The derivative of an order-0 truncation discards all information.
    #[error("cannot differentiate an order-0 truncation")]
    DerivativeOfOrderZero,

    /// Hurwitz expansion (or symbolic flow) depth beyond the stored order.
    #[error("depth {depth} exceeds the available truncation order {order}")]
    DepthExceedsOrder { depth: usize, order: usize },

    /// Truncating to a higher order would invent coefficients.
    #[error("cannot truncate to order {requested}: only order {current} is stored")]
    TruncationBeyondOrder { requested: usize, current: usize },

    /// The evaluation-norm machinery requires |c| <= 1.
    #[error("the norm bound requires |c| <= 1, got {got}")]
    EvaluationNormTooLarge { got: Box<Rational> },

    /// The binomial family and majorant exclude the parameter a = 1.
    #[error("binomial parameter a = 1 is excluded (the closed forms divide by 1 - a)")]
    BinomialParameterOne,

    /// Power majorants need a strictly positive base.
    #[error("power majorant requires a > 0, got {got}")]
    NonpositiveMajorantBase { got: Box<Rational> },

    /// Majorant sequences must be nonnegative termwise.
    #[error("majorant entries must be nonnegative; entry {index} is {value}")]
    NegativeMajorant { index: usize, value: Box<Rational> },

    /// Two sequences that must be compared termwise have different lengths.
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The certification hypothesis |delta^n f(c)| <= a_n fails; the input is
    /// invalid for the requested majorant, not a failure of the bound itself.
    #[error("majorant hypothesis violated at derivative order {index}: norm {norm} > majorant {bound}")]
    HypothesisViolation {
        index: usize,
        norm: Box<Rational>,
        bound: Box<Rational>,
    },

    /// Bound evaluation is only meaningful for t >= 0.
    #[error("bound evaluation requires t >= 0, got {t}")]
    NegativeTime { t: Box<Rational> },

    /// t lies outside the validity interval of the attached closed form.
    #[error("t = {t} is outside the validity interval {domain}")]
    TimeOutsideDomain { t: Box<Rational>, domain: String },
}
