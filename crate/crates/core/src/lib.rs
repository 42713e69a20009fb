//! Independent recomputation of the arithmetic behind the non-existence of
//! degree-16 rational curves (other than lines) on a general heptic fourfold.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rational and multi-modular linear algebra.
//! * [`monomial`]: monomials, orders, monomial ideals, Hilbert counts.
//! * [`dimension`]: Castelnuovo bounds, splitting strata and incidence counts.
//! * [`gins`]: admissible hyperplane-section gins of 16 points in the plane.
//! * [`rewriting`]: C-rewriting trees and the forced-rewriting search.
//! * [`curve`]: the explicit degree-16 curve in P^4 and its initial ideal.
//! * [`singularity`]: delta-invariants, ramification arithmetic.
//! * [`verdict`]: pipelines that assemble everything into a report.

pub mod curve;
pub mod dimension;
mod error;
pub mod exact;
pub mod gins;
pub mod monomial;
pub mod rewriting;
pub mod singularity;
pub mod verdict;

pub use error::{Error, Result};

/// Binomial coefficient with the convention `C(n, k) = 0` whenever `n < k`
/// or either argument is negative.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc as i64
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(12, 5), 792);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(-1, 2), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
