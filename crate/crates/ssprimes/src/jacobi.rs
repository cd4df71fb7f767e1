//! Dimension of the space of weight-2, index-p Jacobi cusp forms:
//!
//! dim J^cusp_{2,p} = Σ_{j=1}^{p} ( ⌊(1+j)/6⌋ − δ6(j) − ⌊j²/(4p)⌋ ),
//!
//! where δ6(j) = 1 iff 6 | j. Individual terms can be negative; the total
//! never is. For square-free index and weight 2 there are no Eisenstein
//! series, so this cusp dimension is the full Jacobi dimension — no second
//! computation exists, it is the same number.
//!
//! The dimension vanishes exactly on the fifteen supersingular primes and
//! is positive for every prime p > 173; [`positivity_scan`] makes that
//! checkable at any bound. The value also equals the quotient genus
//! g(X_0(p)+) computed in [`crate::modular_curve`] — the cross-check the
//! rest of the crate leans on.

use crate::arith::{floor_div, primes_up_to, ValidatedPrime};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The dimension together with its per-term breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiDimension {
    pub p: ValidatedPrime,
    /// terms[j - 1] = ⌊(1+j)/6⌋ − δ6(j) − ⌊j²/(4p)⌋ for j = 1..p.
    pub terms: Vec<i64>,
    /// The (nonnegative) sum of the terms.
    pub dim: u64,
}

/// δ6: 1 if 6 divides j, else 0.
pub fn delta6(j: u64) -> u64 {
    u64::from(j.is_multiple_of(6))
}

fn term(j: u64, p: u64) -> i64 {
    let a = floor_div(1 + j, 6).expect("divisor 6");
    let c = floor_div(j * j, 4 * p).expect("4p > 0");
    a as i64 - delta6(j) as i64 - c as i64
}

/// dim J^cusp_{2,p} with the per-term breakdown retained.
pub fn jacobi_cusp_dim(p: &ValidatedPrime) -> JacobiDimension {
    let pv = p.value();
    let terms: Vec<i64> = (1..=pv).map(|j| term(j, pv)).collect();
    let sum: i64 = terms.iter().sum();
    assert!(sum >= 0, "Jacobi dimension must be nonnegative, got {sum} at p = {pv}");
    JacobiDimension {
        p: *p,
        terms,
        dim: sum as u64,
    }
}

/// The dimension alone, without materialising the terms.
pub fn jacobi_cusp_dim_value(p: &ValidatedPrime) -> u64 {
    let pv = p.value();
    let sum: i64 = (1..=pv).map(|j| term(j, pv)).sum();
    assert!(sum >= 0, "Jacobi dimension must be nonnegative, got {sum} at p = {pv}");
    sum as u64
}

/// Primes p <= bound with dim J^cusp_{2,p} = 0, ascending (sequential).
pub fn positivity_scan_seq(bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| jacobi_cusp_dim_value(&ValidatedPrime::new(p).expect("sieve output")) == 0)
        .collect()
}

/// Primes p <= bound with dim J^cusp_{2,p} = 0, ascending (parallel).
#[cfg(feature = "parallel")]
pub fn positivity_scan_par(bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_par_iter()
        .filter(|&p| jacobi_cusp_dim_value(&ValidatedPrime::new(p).expect("sieve output")) == 0)
        .collect()
}

/// Primes p <= bound with vanishing Jacobi cusp dimension, parallel when
/// the `parallel` feature is on.
pub fn positivity_scan(bound: u64) -> Vec<u64> {
    #[cfg(feature = "parallel")]
    {
        positivity_scan_par(bound)
    }
    #[cfg(not(feature = "parallel"))]
    {
        positivity_scan_seq(bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::SUPERSINGULAR_PRIMES;

    fn dim(p: u64) -> u64 {
        jacobi_cusp_dim_value(&ValidatedPrime::new(p).unwrap())
    }

    #[test]
    fn delta6_examples() {
        assert_eq!(delta6(6), 1);
        assert_eq!(delta6(7), 0);
        assert_eq!(delta6(36), 1);
        assert_eq!(delta6(1), 0);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim(2), 0);
        assert_eq!(dim(11), 0);
        assert_eq!(dim(37), 1);
        assert_eq!(dim(71), 0);
        assert_eq!(dim(173), 4);
        assert_eq!(dim(179), 3);
    }

    #[test]
    fn terms_sum_to_dim() {
        for p in [2, 11, 37, 97, 173, 1009] {
            let d = jacobi_cusp_dim(&ValidatedPrime::new(p).unwrap());
            assert_eq!(d.terms.len() as u64, p);
            assert_eq!(d.terms.iter().sum::<i64>(), d.dim as i64);
            assert_eq!(d.dim, dim(p));
        }
    }

    #[test]
    fn eleven_term_breakdown() {
        // Small enough to check by hand: ⌊(1+j)/6⌋ − δ6(j) − ⌊j²/44⌋.
        let d = jacobi_cusp_dim(&ValidatedPrime::new(11).unwrap());
        assert_eq!(d.terms, vec![0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0]);
        assert_eq!(d.dim, 0);
    }

    #[test]
    fn scan_recovers_the_supersingular_list() {
        assert_eq!(positivity_scan(71), SUPERSINGULAR_PRIMES);
        assert_eq!(positivity_scan(2), vec![2]);
        // No new zeros between 71 and 500.
        assert_eq!(positivity_scan(500), SUPERSINGULAR_PRIMES);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_scan_matches_sequential() {
        assert_eq!(positivity_scan_par(2000), positivity_scan_seq(2000));
    }
}
