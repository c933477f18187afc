//! Crate-private integer combinatorics helpers.
//!
//! Everything is exact over `BigUint`; orders are small (tens) but the
//! values themselves (factorials, multinomials) overflow machine words
//! quickly.

use num_bigint::BigUint;
use num_traits::One;

/// n! as a big integer.
pub(crate) fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Pascal triangle rows 0..=max_n, `rows[n][k] = C(n, k)`.
pub(crate) fn pascal_rows(max_n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![BigUint::one()]);
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigUint::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    rows
}
