//! Integer partitions, partial and complete Bell polynomials, and the
//! Faa di Bruno composition of truncated exponential generating functions.
//!
//! The partial Bell polynomial B_{n,k} sums, over all partitions of n
//! with k parts, the classical term
//!
//! ```text
//! n! / (j_1! ... j_n!) * (b_1/1!)^{j_1} ... (b_n/n!)^{j_n}
//! ```
//!
//! That formula divides by factorials, which a general coefficient ring
//! cannot do. Each term is therefore computed as the integer
//! `n! / (j_1!...j_n! (1!)^{j_1}...(n!)^{j_n})` — the number of set
//! partitions with that block-size multiset, always a nonnegative
//! integer — times the monomial `b_1^{j_1}...b_n^{j_n}`, so every
//! intermediate stays inside the ring.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::combinatorics::factorial;
use crate::error::CoreError;
use crate::ring::Ring;
use crate::series::HurwitzSeries;

/// A partition of n in multiplicity form: `multiplicities[i-1]` is the
/// number of parts of size i, and `sum i * j_i = n` with at least one part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    multiplicities: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a multiplicity vector (j_1, ..., j_n).
    /// The vector length must equal the weight `sum i * j_i`, and the
    /// weight must be positive.
    pub fn new(multiplicities: Vec<usize>) -> Result<Self, CoreError> {
        let weight: usize = multiplicities
            .iter()
            .enumerate()
            .map(|(idx, &j)| (idx + 1) * j)
            .sum();
        if weight == 0 {
            return Err(CoreError::ZeroPartitionTarget);
        }
        if weight != multiplicities.len() {
            return Err(CoreError::LengthMismatch {
                left: multiplicities.len(),
                right: weight,
            });
        }
        Ok(Partition { multiplicities })
    }

    /// The partitioned integer n.
    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of parts, `sum j_i`.
    pub fn part_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of set partitions of an n-element set whose block sizes
    /// realize this integer partition:
    /// `n! / (j_1!...j_n! (1!)^{j_1}...(n!)^{j_n})`.
    pub fn set_partition_count(&self) -> BigUint {
        let numerator = factorial(self.n());
        let mut denominator = BigUint::one();
        for (idx, &j) in self.multiplicities.iter().enumerate() {
            if j == 0 {
                continue;
            }
            denominator *= factorial(j);
            denominator *= factorial(idx + 1).pow(j as u32);
        }
        // exact: the quotient counts set partitions
        numerator / denominator
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, j) in self.multiplicities.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j)?;
        }
        write!(f, ")")
    }
}

/// Every multiplicity vector with `sum i * j_i = n`, optionally filtered
/// to a fixed part count, in ascending lexicographic order on
/// (j_1, ..., j_n). The order is part of the contract: output is
/// reproducible byte for byte.
pub fn enumerate_partitions(n: usize, parts: Option<usize>) -> Result<Vec<Partition>, CoreError> {
    if n == 0 {
        return Err(CoreError::ZeroPartitionTarget);
    }
    if let Some(k) = parts {
        if k < 1 || k > n {
            return Err(CoreError::PartsOutOfRange { n, parts: k });
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    descend(1, n, 0, parts, &mut current, &mut out);
    Ok(out)
}

fn descend(
    size: usize,
    remaining: usize,
    parts_used: usize,
    parts: Option<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if parts.is_none_or(|k| parts_used == k) {
            out.push(Partition {
                multiplicities: current.clone(),
            });
        }
        return;
    }
    if size > current.len() {
        return;
    }
    for j in 0..=remaining / size {
        if let Some(k) = parts {
            if parts_used + j > k {
                break;
            }
        }
        current[size - 1] = j;
        descend(size + 1, remaining - j * size, parts_used + j, parts, current, out);
    }
    current[size - 1] = 0;
}

/// Partial Bell polynomial B_{n,k}(b_1, ..., b_n) over any ring.
///
/// `b` is indexed from 1, so `b[0]` is b_1 and at least n entries are
/// required.
pub fn partial_bell<E: Ring>(n: usize, k: usize, b: &[E]) -> Result<E, CoreError> {
    if n == 0 {
        return Err(CoreError::ZeroPartitionTarget);
    }
    if k < 1 || k > n {
        return Err(CoreError::BellIndexOutOfRange { n, k });
    }
    require_len(b, n)?;
    let witness = &b[0];
    let mut acc = witness.zero_like();
    for partition in enumerate_partitions(n, Some(k))? {
        acc = acc.add(&bell_term(&partition, b, witness));
    }
    Ok(acc)
}

/// Complete Bell polynomial Y_n(b_1,...,b_n; a_1,...,a_n), the nth
/// derivative at 0 of a composition whose outer derivatives are the a's
/// and inner derivatives the b's.
///
/// Sums over all partitions of n directly, picking `a_k` by the part
/// count of each partition; agreement with `sum_k B_{n,k} a_k` is a
/// tested consistency property, not the implementation route.
pub fn complete_bell<E: Ring>(n: usize, b: &[E], a: &[E]) -> Result<E, CoreError> {
    if n == 0 {
        return Err(CoreError::ZeroPartitionTarget);
    }
    require_len(b, n)?;
    require_len(a, n)?;
    let witness = &b[0];
    let mut acc = witness.zero_like();
    for partition in enumerate_partitions(n, None)? {
        let term = bell_term(&partition, b, witness);
        acc = acc.add(&term.mul(&a[partition.part_count() - 1]));
    }
    Ok(acc)
}

fn bell_term<E: Ring>(partition: &Partition, b: &[E], witness: &E) -> E {
    let count = BigInt::from(partition.set_partition_count());
    let mut term = witness.integer_like(&count);
    for (idx, &j) in partition.multiplicities().iter().enumerate() {
        if j > 0 {
            term = term.mul(&b[idx].pow(j as u64));
        }
    }
    term
}

fn require_len<E>(values: &[E], need: usize) -> Result<(), CoreError> {
    if values.len() < need {
        return Err(CoreError::TooFewCoefficients {
            need,
            got: values.len(),
        });
    }
    Ok(())
}

/// Composition f(g) of truncated exponential generating functions at a
/// shared order N: constant coefficient f(0) = a_0, and nth coefficient
/// Y_n(b_1,...,b_n; a_1,...,a_n) for 1 <= n <= N.
///
/// The inner series must have zero constant term; composition at a
/// nonzero base point would need a convention for re-centering the outer
/// coefficients and is rejected instead.
pub fn compose_egf<E: Ring>(
    f: &HurwitzSeries<E>,
    g: &HurwitzSeries<E>,
) -> Result<HurwitzSeries<E>, CoreError> {
    if f.order() != g.order() {
        return Err(CoreError::OrderMismatch {
            left: f.order(),
            right: g.order(),
        });
    }
    if !g.coeff(0).is_zero() {
        return Err(CoreError::NonzeroConstantTerm);
    }
    let order = f.order();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(f.coeff(0).clone());
    for n in 1..=order {
        coeffs.push(complete_bell(n, &g.coeffs()[1..=n], &f.coeffs()[1..=n])?);
    }
    HurwitzSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use proptest::prelude::*;

    fn rats(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from_int(v)).collect()
    }

    fn series(vals: &[i64]) -> HurwitzSeries<Rational> {
        HurwitzSeries::new(rats(vals)).unwrap()
    }

    /// Independent partition-count oracle: classic two-variable recursion
    /// p(n, max) counting partitions of n into parts of size <= max.
    fn count_partitions_oracle(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if max == 0 {
            return 0;
        }
        let mut total = 0;
        for first in 1..=max.min(n) {
            total += count_partitions_oracle(n - first, first);
        }
        total
    }

    #[test]
    fn single_partition_of_one() {
        let ps = enumerate_partitions(1, None).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].multiplicities(), &[1]);
    }

    #[test]
    fn partitions_of_five() {
        // oracle: exhaustive recursive count
        assert_eq!(count_partitions_oracle(5, 5), 7);
        assert_eq!(enumerate_partitions(5, None).unwrap().len(), 7);
    }

    #[test]
    fn partitions_of_three_with_two_parts() {
        let ps = enumerate_partitions(3, Some(2)).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].multiplicities(), &[1, 1, 0]);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let ps = enumerate_partitions(4, None).unwrap();
        let vecs: Vec<&[usize]> = ps.iter().map(|p| p.multiplicities()).collect();
        assert_eq!(
            vecs,
            vec![
                &[0, 0, 0, 1][..],
                &[0, 2, 0, 0][..],
                &[1, 0, 1, 0][..],
                &[2, 1, 0, 0][..],
                &[4, 0, 0, 0][..],
            ]
        );
        let mut sorted = vecs.clone();
        sorted.sort();
        assert_eq!(vecs, sorted);
    }

    #[test]
    fn enumeration_rejects_bad_input() {
        assert_eq!(
            enumerate_partitions(0, None),
            Err(CoreError::ZeroPartitionTarget)
        );
        assert_eq!(
            enumerate_partitions(3, Some(0)),
            Err(CoreError::PartsOutOfRange { n: 3, parts: 0 })
        );
        assert_eq!(
            enumerate_partitions(3, Some(4)),
            Err(CoreError::PartsOutOfRange { n: 3, parts: 4 })
        );
    }

    #[test]
    fn counts_agree_with_oracle_and_split_by_parts() {
        for n in 1..=20usize {
            let all = enumerate_partitions(n, None).unwrap();
            assert_eq!(all.len() as u64, count_partitions_oracle(n, n), "n = {n}");
            for p in &all {
                let weight: usize = p
                    .multiplicities()
                    .iter()
                    .enumerate()
                    .map(|(idx, &j)| (idx + 1) * j)
                    .sum();
                assert_eq!(weight, n);
                assert!(p.part_count() >= 1);
            }
            let by_parts: usize = (1..=n)
                .map(|k| enumerate_partitions(n, Some(k)).unwrap().len())
                .sum();
            assert_eq!(by_parts, all.len(), "n = {n}");
        }
    }

    #[test]
    fn set_partition_counts() {
        // partitions of 4 with 2 parts: {3+1} -> 4, {2+2} -> 3
        let p31 = Partition::new(vec![1, 0, 1, 0]).unwrap();
        assert_eq!(p31.set_partition_count(), BigUint::from(4u32));
        let p22 = Partition::new(vec![0, 2, 0, 0]).unwrap();
        assert_eq!(p22.set_partition_count(), BigUint::from(3u32));
    }

    #[test]
    fn partition_constructor_validates() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![0, 0]).is_err());
        // weight 3 but vector length 2
        assert!(Partition::new(vec![1, 1]).is_err());
        assert!(Partition::new(vec![1, 1, 0]).is_ok());
    }

    #[test]
    fn partial_bell_values() {
        // B_{3,2} = 3 b_1 b_2 at b = (1, 2, 6)
        assert_eq!(
            partial_bell(3, 2, &rats(&[1, 2, 6])).unwrap(),
            Rational::from_int(6)
        );
        // B_{n,1} = b_n
        assert_eq!(
            partial_bell(4, 1, &rats(&[1, 1, 1, 1])).unwrap(),
            Rational::one()
        );
        // brute force over the two partitions of 4 with 2 parts: 4 + 3
        assert_eq!(
            partial_bell(4, 2, &rats(&[1, 1, 1, 1])).unwrap(),
            Rational::from_int(7)
        );
    }

    #[test]
    fn partial_bell_rejects_bad_indices() {
        assert_eq!(
            partial_bell(3, 4, &rats(&[1, 1, 1])),
            Err(CoreError::BellIndexOutOfRange { n: 3, k: 4 })
        );
        assert_eq!(
            partial_bell(3, 0, &rats(&[1, 1, 1])),
            Err(CoreError::BellIndexOutOfRange { n: 3, k: 0 })
        );
        assert_eq!(
            partial_bell(3, 2, &rats(&[1, 1])),
            Err(CoreError::TooFewCoefficients { need: 3, got: 2 })
        );
    }

    #[test]
    fn complete_bell_values() {
        // Y_1(b_1; a_1) = a_1 b_1
        assert_eq!(
            complete_bell(1, &rats(&[2]), &rats(&[3])).unwrap(),
            Rational::from_int(6)
        );
        // Y_2 = a_1 b_2 + a_2 b_1^2 at b = (1,2), a = (1,1)
        assert_eq!(
            complete_bell(2, &rats(&[1, 2]), &rats(&[1, 1])).unwrap(),
            Rational::from_int(3)
        );
        // Y_3 = a_1 b_3 + a_2 (3 b_1 b_2) + a_3 b_1^3 at b = (1,1,1), a = (1,2,6)
        assert_eq!(
            complete_bell(3, &rats(&[1, 1, 1]), &rats(&[1, 2, 6])).unwrap(),
            Rational::from_int(13)
        );
        assert_eq!(
            complete_bell(0, &rats(&[]), &rats(&[])),
            Err(CoreError::ZeroPartitionTarget)
        );
    }

    #[test]
    fn compose_identity_and_zero() {
        let f = series(&[3, 1, 4, 1, 5]);
        let x = HurwitzSeries::variable(&Rational::one(), 4);
        assert_eq!(compose_egf(&f, &x).unwrap(), f);
        let zero = HurwitzSeries::zero(&Rational::one(), 4);
        assert_eq!(
            compose_egf(&f, &zero).unwrap(),
            HurwitzSeries::constant(Rational::from_int(3), 4)
        );
    }

    #[test]
    fn compose_bell_numbers() {
        // exp composed with exp(x) - 1 counts set partitions
        let f = series(&[1, 1, 1, 1, 1, 1]);
        let g = series(&[0, 1, 1, 1, 1, 1]);
        let composed = compose_egf(&f, &g).unwrap();
        assert_eq!(composed, series(&[1, 1, 2, 5, 15, 52]));
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        let f = series(&[1, 1]);
        let g = series(&[1, 1]);
        assert_eq!(compose_egf(&f, &g), Err(CoreError::NonzeroConstantTerm));
        let shorter = series(&[0, 1, 0]);
        assert_eq!(
            compose_egf(&f, &shorter),
            Err(CoreError::OrderMismatch { left: 1, right: 2 })
        );
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-30i64..=30, 1i64..=10).prop_map(|(p, q)| Rational::ratio(p, q))
    }

    /// Oracle: expand f(g) by repeated Hurwitz multiplication,
    /// a_0 + sum_k (a_k / k!) g^k, entirely without Bell polynomials.
    fn compose_by_substitution(
        f: &HurwitzSeries<Rational>,
        g: &HurwitzSeries<Rational>,
    ) -> HurwitzSeries<Rational> {
        let order = f.order();
        let mut acc = HurwitzSeries::constant(f.coeff(0).clone(), order);
        let mut g_power = Ring::one_like(g);
        let mut k_factorial = Rational::one();
        for k in 1..=order {
            g_power = g_power.checked_mul(g).unwrap();
            k_factorial = k_factorial * Rational::from_int(k as i64);
            let weight = f.coeff(k).clone() / k_factorial.clone();
            acc = acc.checked_add(&g_power.scale(&weight)).unwrap();
        }
        acc
    }

    proptest! {
        #[test]
        fn partial_bell_boundary_rows(
            n in 1usize..=15,
            seed in proptest::collection::vec(rational_strategy(), 15),
        ) {
            let b = &seed[..n];
            // B_{n,n} = b_1^n and B_{n,1} = b_n
            prop_assert_eq!(partial_bell(n, n, b).unwrap(), b[0].pow(n as u64));
            prop_assert_eq!(partial_bell(n, 1, b).unwrap(), b[n - 1].clone());
        }

        #[test]
        fn complete_bell_matches_weighted_partial_sum(
            n in 1usize..=9,
            b_seed in proptest::collection::vec(rational_strategy(), 9),
            a_seed in proptest::collection::vec(rational_strategy(), 9),
        ) {
            let b = &b_seed[..n];
            let a = &a_seed[..n];
            let mut weighted = Rational::zero();
            for k in 1..=n {
                weighted = weighted + partial_bell(n, k, b).unwrap() * a[k - 1].clone();
            }
            prop_assert_eq!(complete_bell(n, b, a).unwrap(), weighted);
        }

        #[test]
        fn compose_matches_substitution_oracle(
            order in 1usize..=8,
            f_seed in proptest::collection::vec(rational_strategy(), 9),
            g_seed in proptest::collection::vec(rational_strategy(), 9),
        ) {
            let f = HurwitzSeries::new(f_seed[..=order].to_vec()).unwrap();
            let mut g_coeffs = g_seed[..=order].to_vec();
            g_coeffs[0] = Rational::zero();
            let g = HurwitzSeries::new(g_coeffs).unwrap();
            prop_assert_eq!(
                compose_egf(&f, &g).unwrap(),
                compose_by_substitution(&f, &g)
            );
        }
    }
}
