//! Exact-arithmetic toolkit around the fifteen supersingular primes
//! S = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71}.
//!
//! Four computable characterizations of membership in S are implemented and
//! cross-verified prime by prime:
//!
//! 1. p divides the order of the Monster sporadic simple group ([`harness`]);
//! 2. the Fricke quotient X_0(p)+ of the modular curve X_0(p) has genus 0
//!    ([`modular_curve`]);
//! 3. every supersingular j-invariant in characteristic p lies in F_p
//!    ([`locus`]);
//! 4. the space of weight-2 index-p Jacobi cusp forms has dimension 0
//!    ([`jacobi`]).
//!
//! The load-bearing cross-check is the dimension-level identity
//! `dim J^cusp_{2,p} = g(X_0(p)+)`, which ties the Jacobi-form route (4) to
//! the modular-curve route (2) through two completely different computations:
//! a closed-form floor sum on one side, the Gamma_0(p) genus formula plus a
//! class-number count of Fricke fixed points on the other.
//!
//! [`harness::verify_coincidence`] sweeps every prime up to a bound, checks
//! that the four conditions agree, and attaches the Kodaira-dimension status
//! of the moduli space of (1,p)-polarised abelian surfaces. The `ssprimes`
//! binary exposes the whole pipeline as CLI subcommands with table, JSON and
//! CSV output.
//!
//! All arithmetic is exact: 64-bit integers with 128-bit intermediates,
//! exact rationals for the genus formula, and digit-sequence arithmetic for
//! the 54-digit Monster order. Nothing is floating point.
//!
//! With the default `parallel` feature the per-prime sweeps and the per-j
//! supersingular scans run on rayon; disabling default features yields a
//! fully sequential build with identical output. The `*_seq` entry points
//! remain available in either build so the two paths can be benchmarked
//! against each other.

pub mod arith;
pub mod finite_field;
pub mod harness;
pub mod jacobi;
pub mod locus;
pub mod modular_curve;
pub mod quadform;
pub mod report;

pub use arith::{DecimalConstant, ValidatedPrime};
pub use harness::{
    verify_coincidence, ConditionReport, KodairaStatus, MonsterOrder, SUPERSINGULAR_PRIMES,
};

/// Errors for contract violations on user-supplied inputs.
///
/// Internal invariants (integrality of the genus formula, non-negative
/// Jacobi dimensions, Riemann-Hurwitz divisibility) are enforced with
/// assertions instead: they cannot fail for validated inputs, and a panic
/// makes a transcription bug loud in tests.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input failed the primality certificate. Carries the smallest prime
    /// factor when one exists (composites), `None` for 0 and 1.
    #[error("{value} is not prime{}", .factor.map(|f| format!(" (divisible by {f})")).unwrap_or_default())]
    NotPrime { value: u64, factor: Option<u64> },
    /// Primes are supported up to 2^32.
    #[error("prime {0} exceeds the supported range (< 2^32)")]
    PrimeTooLarge(u64),
    /// The operation is defined for odd primes only.
    #[error("operation requires an odd prime, got 2")]
    OddPrimeRequired,
    /// Zero modulus or zero divisor.
    #[error("division by zero")]
    DivisionByZero,
    /// Modulus for decimal reduction must be below 2^32.
    #[error("modulus {0} exceeds the supported range (< 2^32)")]
    ModulusTooLarge(u64),
    /// Not a valid decimal digit string.
    #[error("invalid decimal constant: {0}")]
    InvalidDecimal(&'static str),
    /// Discriminants must be negative and congruent to 0 or 1 mod 4.
    #[error("invalid discriminant {0}: must be negative and \u{2261} 0 or 1 (mod 4)")]
    InvalidDiscriminant(i64),
    /// Form enumeration is capped at |D| <= 2^24.
    #[error("discriminant {0} exceeds the supported range (|D| <= 2^24)")]
    DiscriminantTooLarge(i64),
    /// Mixed-field arithmetic is a usage error.
    #[error("elements belong to different fields")]
    FieldMismatch,
    /// Input outside the documented range of an operation.
    #[error("{context}: {value} is outside the supported range")]
    OutOfRange {
        context: &'static str,
        value: u64,
    },
    /// A state the construction rules make unreachable.
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
