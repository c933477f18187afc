//! Shared input builders for the benchmark targets.

use hurwitz_core::{DerivativeJet, FamilyKind, FamilySpec, HurwitzSeries, Rational};

/// The factorial jet (0!, 1!, ..., N!), the slowest-growing family with a
/// fully dense recursion.
pub fn factorial_jet(order: usize) -> DerivativeJet<Rational> {
    hurwitz_core::jet_of_family(
        &FamilySpec::new(FamilyKind::Geometric, order).expect("geometric family is unconstrained"),
    )
}

/// A dense rational series (1, 1/2, 1/3, ...) of the given order.
pub fn harmonic_series(order: usize) -> HurwitzSeries<Rational> {
    HurwitzSeries::new(
        (0..=order)
            .map(|n| Rational::ratio(1, n as i64 + 1))
            .collect(),
    )
    .expect("order + 1 >= 1 coefficients")
}
