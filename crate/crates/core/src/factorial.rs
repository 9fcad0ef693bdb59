//! Log-factorial table used for scale factors like `1/√(k!)`.
//!
//! Working on the log scale keeps monomial basis elements and binomial
//! weights overflow-free far past the point where `k!` itself leaves the
//! `f64` range.

use crate::kahan::KahanSum;
use std::sync::OnceLock;

/// Largest index the table covers; matches the largest quadrature order the
/// crate hands out.
pub(crate) const MAX_LN_FACTORIAL: usize = 1024;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(MAX_LN_FACTORIAL + 1);
        let mut acc = KahanSum::new();
        t.push(0.0); // 0! = 1
        for k in 1..=MAX_LN_FACTORIAL {
            acc.add((k as f64).ln());
            t.push(acc.value());
        }
        t
    })
}

/// `ln(k!)`, exact to a few ulps for `k ≤ 1024`.
pub(crate) fn ln_factorial(k: usize) -> f64 {
    table()[k]
}
