//! Per-prime evaluation of the four characterizations, the cross-checks
//! between them, the Kodaira-status tag, and the integrity guard on the
//! Monster-order constant.
//!
//! For each prime p the four conditions are:
//!
//! 1. p divides the order of the Monster;
//! 2. g(X_0(p)+) = 0;
//! 3. every supersingular j-invariant in characteristic p is F_p-rational;
//! 4. dim J^cusp_{2,p} = 0.
//!
//! Each is computed by an independent pipeline, and [`verify_coincidence`]
//! sweeps a whole prime range checking that they always agree and that the
//! primes where they hold are exactly S = {2, ..., 71}. Why the four
//! characterizations coincide is an open problem; the harness verifies the
//! coincidence empirically and claims nothing about the cause.
//!
//! The Monster order enters only through divisibility, but a mistyped
//! constant would silently corrupt condition 1, so the stored digits are
//! guarded two ways: the stored prime factorization is re-multiplied out
//! with schoolbook digit arithmetic and compared against the digits, and
//! trial division of the digits over all primes <= 1000 must succeed on
//! exactly S. A transcription error in either copy breaks at least one
//! check.

use crate::arith::{decimal_mod, primes_up_to, DecimalConstant, ValidatedPrime};
use crate::jacobi::jacobi_cusp_dim_value;
use crate::locus::{supersingular_report, supersingular_report_seq, SupersingularReport};
use crate::modular_curve::{genus_x0, GenusProfile};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The fifteen supersingular primes.
pub const SUPERSINGULAR_PRIMES: [u64; 15] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71];

/// Whether p belongs to S.
pub fn is_supersingular_prime(p: u64) -> bool {
    SUPERSINGULAR_PRIMES.contains(&p)
}

const MONSTER_ORDER_DIGITS: &str = "808017424794512875886459904961710757005754368000000000";

const MONSTER_FACTORIZATION: [(u64, u32); 15] = [
    (2, 46),
    (3, 20),
    (5, 9),
    (7, 6),
    (11, 2),
    (13, 3),
    (17, 1),
    (19, 1),
    (23, 1),
    (29, 1),
    (31, 1),
    (41, 1),
    (47, 1),
    (59, 1),
    (71, 1),
];

/// The order of the Monster group as decimal digits plus its prime
/// factorization — two copies of the same integer, cross-checked by
/// [`MonsterOrder::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonsterOrder {
    digits: DecimalConstant,
    factorization: Vec<(u64, u32)>,
}

/// Breakdown of the Monster-constant integrity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonsterCheck {
    /// Schoolbook product of the factorization reproduces the digits.
    pub product_matches_digits: bool,
    /// Primes <= 1000 dividing the digits are exactly S.
    pub divisor_primes_are_s: bool,
    /// The factorization's prime set is exactly S.
    pub factorization_primes_are_s: bool,
}

impl MonsterCheck {
    pub fn valid(&self) -> bool {
        self.product_matches_digits && self.divisor_primes_are_s && self.factorization_primes_are_s
    }
}

impl MonsterOrder {
    /// The standard constants.
    pub fn standard() -> Self {
        Self {
            digits: DecimalConstant::parse(MONSTER_ORDER_DIGITS).expect("valid constant"),
            factorization: MONSTER_FACTORIZATION.to_vec(),
        }
    }

    /// Assemble from explicit parts (used by tamper tests).
    pub fn new(digits: DecimalConstant, factorization: Vec<(u64, u32)>) -> Self {
        Self {
            digits,
            factorization,
        }
    }

    pub fn digits(&self) -> &DecimalConstant {
        &self.digits
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    /// Run all three integrity checks.
    pub fn check(&self) -> MonsterCheck {
        let product = factorization_product_digits(&self.factorization);
        let product_matches_digits = product == self.digits.digits();

        let divisor_primes_are_s = primes_up_to(1000).into_iter().all(|q| {
            let divides = decimal_mod(&self.digits, q).expect("q < 2^32") == 0;
            divides == is_supersingular_prime(q)
        });

        let mut primes: Vec<u64> = self.factorization.iter().map(|&(p, _)| p).collect();
        primes.sort_unstable();
        let factorization_primes_are_s = primes == SUPERSINGULAR_PRIMES;

        MonsterCheck {
            product_matches_digits,
            divisor_primes_are_s,
            factorization_primes_are_s,
        }
    }
}

/// Multiply out Π p^e as a digit sequence (most significant first) by
/// repeated schoolbook multiplication with small factors.
fn factorization_product_digits(factorization: &[(u64, u32)]) -> Vec<u8> {
    let mut digits = vec![1u8]; // least significant first while working
    for &(p, e) in factorization {
        for _ in 0..e {
            let mut carry = 0u64;
            for d in digits.iter_mut() {
                let v = *d as u64 * p + carry;
                *d = (v % 10) as u8;
                carry = v / 10;
            }
            while carry > 0 {
                digits.push((carry % 10) as u8);
                carry /= 10;
            }
        }
    }
    digits.reverse();
    digits
}

/// True iff the stored Monster constants pass all integrity checks.
pub fn validate_monster_constant() -> bool {
    MonsterOrder::standard().check().valid()
}

/// Kodaira-dimension status of the moduli space A_p of (1,p)-polarised
/// abelian surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaStatus {
    /// p <= 11: A_p is unirational, so Kodaira dimension -infinity.
    Unirational,
    /// p not in S: A_p is of general type.
    GeneralType,
    /// p in S, p >= 13: Kodaira dimension is known non-negative, but the
    /// exact value (in particular general-type-ness) is open.
    NonNegativeOpen,
}

impl KodairaStatus {
    pub fn classify(p: &ValidatedPrime) -> Self {
        let v = p.value();
        if v <= 11 {
            KodairaStatus::Unirational
        } else if !is_supersingular_prime(v) {
            KodairaStatus::GeneralType
        } else {
            KodairaStatus::NonNegativeOpen
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            KodairaStatus::Unirational => "Unirational",
            KodairaStatus::GeneralType => "GeneralType",
            KodairaStatus::NonNegativeOpen => "NonNegativeOpen",
        }
    }
}

impl std::fmt::Display for KodairaStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Status of composite polarisation degrees, for context only: nothing
/// composite is computed here.
pub const COMPOSITE_INDEX_NOTE: &str = "Composite degrees d for context (not computed here): \
A_d has non-negative Kodaira dimension for every d >= 13 except possibly d = 15, 24, 30, 36, \
which remain open; the formerly open cases d = 14, 16, 18, 20 have been settled.";

/// The four condition values for one prime, their agreement, and the
/// supporting numbers each pipeline produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub p: ValidatedPrime,
    /// p divides the Monster order.
    pub c1_monster: bool,
    /// g(X_0(p)+) = 0.
    pub c2_genus_plus_zero: bool,
    /// All supersingular j-invariants lie in F_p.
    pub c3_ss_rational: bool,
    /// dim J^cusp_{2,p} = 0.
    pub c4_jacobi_zero: bool,
    /// All four conditions agree (true or false together).
    pub consistent: bool,
    /// Membership in the stored list S.
    pub in_s: bool,
    pub kodaira: KodairaStatus,
    pub genus: GenusProfile,
    pub jacobi_dim: u64,
    pub ss_expected: u64,
    /// How many supersingular j-invariants the F_p scan found.
    pub ss_in_fp: u64,
}

fn build_report(
    p: &ValidatedPrime,
    monster: &MonsterOrder,
    ss: SupersingularReport,
) -> ConditionReport {
    let genus = genus_x0(p);
    let jacobi_dim = jacobi_cusp_dim_value(p);
    let c1_monster = decimal_mod(monster.digits(), p.value()).expect("p < 2^32") == 0;
    let c2_genus_plus_zero = genus.genus_plus == 0;
    let c3_ss_rational = ss.all_rational;
    let c4_jacobi_zero = jacobi_dim == 0;
    let consistent = c1_monster == c2_genus_plus_zero
        && c2_genus_plus_zero == c3_ss_rational
        && c3_ss_rational == c4_jacobi_zero;
    ConditionReport {
        p: *p,
        c1_monster,
        c2_genus_plus_zero,
        c3_ss_rational,
        c4_jacobi_zero,
        consistent,
        in_s: is_supersingular_prime(p.value()),
        kodaira: KodairaStatus::classify(p),
        genus,
        jacobi_dim,
        ss_expected: ss.expected_count,
        ss_in_fp: ss.found_in_fp.len() as u64,
    }
}

/// Evaluate all four conditions at one prime. The supersingular scan uses
/// the parallel path when available.
pub fn condition_report(p: &ValidatedPrime) -> ConditionReport {
    build_report(p, &MonsterOrder::standard(), supersingular_report(p))
}

/// Fully sequential variant of [`condition_report`].
pub fn condition_report_seq(p: &ValidatedPrime) -> ConditionReport {
    build_report(p, &MonsterOrder::standard(), supersingular_report_seq(p))
}

/// Outcome of a coincidence sweep over all primes up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceSummary {
    pub bound: u64,
    /// Number of primes checked.
    pub checked: u64,
    /// Primes where the four conditions disagree; must be empty.
    pub inconsistencies: Vec<u64>,
    /// Primes where all four conditions hold; must equal S ∩ [2, bound].
    pub zero_set: Vec<u64>,
    /// Per-prime records, ascending.
    pub reports: Vec<ConditionReport>,
}

impl CoincidenceSummary {
    /// The zero set the sweep must reproduce: S ∩ [2, bound].
    pub fn expected_zero_set(&self) -> Vec<u64> {
        SUPERSINGULAR_PRIMES
            .iter()
            .copied()
            .filter(|&s| s <= self.bound)
            .collect()
    }

    /// No inconsistencies and the zero set is exactly S ∩ [2, bound].
    pub fn is_success(&self) -> bool {
        self.inconsistencies.is_empty() && self.zero_set == self.expected_zero_set()
    }
}

fn summarize(bound: u64, reports: Vec<ConditionReport>) -> CoincidenceSummary {
    let inconsistencies = reports
        .iter()
        .filter(|r| !r.consistent)
        .map(|r| r.p.value())
        .collect();
    let zero_set = reports
        .iter()
        .filter(|r| r.c1_monster && r.c2_genus_plus_zero && r.c3_ss_rational && r.c4_jacobi_zero)
        .map(|r| r.p.value())
        .collect();
    CoincidenceSummary {
        bound,
        checked: reports.len() as u64,
        inconsistencies,
        zero_set,
        reports,
    }
}

fn sweep_primes(bound: u64) -> Vec<ValidatedPrime> {
    primes_up_to(bound)
        .into_iter()
        .map(|p| ValidatedPrime::new(p).expect("sieve output"))
        .collect()
}

/// Sequential coincidence sweep over all primes <= bound.
pub fn verify_coincidence_seq(bound: u64) -> CoincidenceSummary {
    let monster = MonsterOrder::standard();
    let reports = sweep_primes(bound)
        .iter()
        .map(|p| build_report(p, &monster, supersingular_report_seq(p)))
        .collect();
    summarize(bound, reports)
}

/// Parallel coincidence sweep: primes are evaluated concurrently, records
/// assembled in ascending order regardless of scheduling.
#[cfg(feature = "parallel")]
pub fn verify_coincidence_par(bound: u64) -> CoincidenceSummary {
    let monster = MonsterOrder::standard();
    let reports = sweep_primes(bound)
        .par_iter()
        .map(|p| build_report(p, &monster, supersingular_report_seq(p)))
        .collect();
    summarize(bound, reports)
}

/// Coincidence sweep over all primes <= bound, parallel when the
/// `parallel` feature is on.
pub fn verify_coincidence(bound: u64) -> CoincidenceSummary {
    #[cfg(feature = "parallel")]
    {
        verify_coincidence_par(bound)
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_coincidence_seq(bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn the_list_is_sane() {
        assert_eq!(SUPERSINGULAR_PRIMES.len(), 15);
        assert!(SUPERSINGULAR_PRIMES.windows(2).all(|w| w[0] < w[1]));
        assert!(SUPERSINGULAR_PRIMES.iter().all(|&p| is_prime(p)));
        assert_eq!(SUPERSINGULAR_PRIMES[14], 71);
    }

    #[test]
    fn monster_constant_validates() {
        let check = MonsterOrder::standard().check();
        assert!(check.product_matches_digits);
        assert!(check.divisor_primes_are_s);
        assert!(check.factorization_primes_are_s);
        assert!(validate_monster_constant());
    }

    #[test]
    fn lowered_exponent_breaks_the_product() {
        let mut fact = MONSTER_FACTORIZATION.to_vec();
        fact[0] = (2, 45);
        let tampered = MonsterOrder::new(
            DecimalConstant::parse(MONSTER_ORDER_DIGITS).unwrap(),
            fact,
        );
        let check = tampered.check();
        assert!(!check.product_matches_digits);
        assert!(!check.valid());
    }

    #[test]
    fn altered_digit_breaks_the_product() {
        let mut s = MONSTER_ORDER_DIGITS.to_string();
        s.pop();
        s.push('1');
        let tampered = MonsterOrder::new(
            DecimalConstant::parse(&s).unwrap(),
            MONSTER_FACTORIZATION.to_vec(),
        );
        let check = tampered.check();
        assert!(!check.product_matches_digits);
        // The altered number is odd, so division by 2 fails too.
        assert!(!check.divisor_primes_are_s);
        assert!(!check.valid());
    }

    #[test]
    fn foreign_prime_in_factorization_is_caught() {
        let mut fact = MONSTER_FACTORIZATION.to_vec();
        fact.push((73, 1));
        let tampered = MonsterOrder::new(
            DecimalConstant::parse(MONSTER_ORDER_DIGITS).unwrap(),
            fact,
        );
        assert!(!tampered.check().factorization_primes_are_s);
        assert!(!tampered.check().valid());
    }

    #[test]
    fn condition_report_examples() {
        let r71 = condition_report(&ValidatedPrime::new(71).unwrap());
        assert!(r71.c1_monster && r71.c2_genus_plus_zero && r71.c3_ss_rational && r71.c4_jacobi_zero);
        assert!(r71.consistent && r71.in_s);
        assert_eq!(r71.kodaira, KodairaStatus::NonNegativeOpen);

        let r7 = condition_report(&ValidatedPrime::new(7).unwrap());
        assert!(r7.consistent && r7.in_s && r7.c1_monster);
        assert_eq!(r7.kodaira, KodairaStatus::Unirational);

        let r37 = condition_report(&ValidatedPrime::new(37).unwrap());
        assert!(!r37.c1_monster && !r37.c2_genus_plus_zero && !r37.c3_ss_rational && !r37.c4_jacobi_zero);
        assert!(r37.consistent && !r37.in_s);
        assert_eq!(r37.kodaira, KodairaStatus::GeneralType);
        assert_eq!(r37.jacobi_dim, 1);
        assert_eq!(r37.genus.genus_plus, 1);
    }

    #[test]
    fn sweep_to_one_hundred() {
        let summary = verify_coincidence(100);
        assert_eq!(summary.checked, 25);
        assert!(summary.inconsistencies.is_empty());
        assert_eq!(summary.zero_set, SUPERSINGULAR_PRIMES);
        assert!(summary.is_success());
        assert_eq!(summary.reports.len(), 25);
        // Records come back ascending.
        assert!(summary.reports.windows(2).all(|w| w[0].p < w[1].p));
    }

    #[test]
    fn sweep_bound_two() {
        let summary = verify_coincidence(2);
        assert_eq!(summary.zero_set, vec![2]);
        assert!(summary.is_success());
    }

    #[test]
    fn kodaira_partition() {
        for p in primes_up_to(200) {
            let vp = ValidatedPrime::new(p).unwrap();
            let tag = KodairaStatus::classify(&vp);
            match tag {
                KodairaStatus::Unirational => assert!(p <= 11),
                KodairaStatus::GeneralType => assert!(!is_supersingular_prime(p)),
                KodairaStatus::NonNegativeOpen => {
                    assert!(is_supersingular_prime(p) && p >= 13)
                }
            }
            // No prime strictly between 11 and 37 can be of general type:
            // they all lie in S.
            if p > 11 && p < 37 {
                assert_ne!(tag, KodairaStatus::GeneralType);
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_sweep_matches_sequential() {
        assert_eq!(verify_coincidence_par(300), verify_coincidence_seq(300));
    }
}
