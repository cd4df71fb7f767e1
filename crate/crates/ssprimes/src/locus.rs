//! The supersingular locus in characteristic p: which j-invariants are
//! supersingular, and do they all lie in F_p?
//!
//! The number of supersingular j-invariants in F_{p^2} is known in closed
//! form (⌊p/12⌋ plus a correction by p mod 12), so rationality of the whole
//! locus reduces to count-matching: scan j over F_p, test each by exact
//! point counting over F_p, and compare how many turn up against the
//! formula. That is O(p^2) per prime instead of the O(p^4) it would take to
//! enumerate F_{p^2}; the O(p^4) enumeration is still implemented
//! ([`oracle_enumerate_fp2`]) as an independent oracle for small p.
//!
//! A curve with a prescribed j-invariant is built by the standard recipe
//! y^2 = x^3 + 3j(1728-j) x + 2j(1728-j)^2, with y^2 = x^3 + 1 for j = 0
//! and y^2 = x^3 + x for j = 1728. Supersingularity is twist-independent,
//! so one curve per j decides the locus. The curve is supersingular exactly
//! when the Frobenius trace p + 1 - #E(F_p) vanishes mod p; by Hasse the
//! trace is below p in absolute value for p >= 5, so "vanishes mod p"
//! means "equals zero".
//!
//! Characteristics 2 and 3 are special-cased (unique supersingular
//! invariant j = 0); short Weierstrass arithmetic does not apply there.

use crate::arith::{legendre, mul_mod, ValidatedPrime};
use crate::finite_field::{Fp2, Fp2Element, FpElement};
use crate::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outcome of the F_p supersingular scan for one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingularReport {
    pub p: ValidatedPrime,
    /// Total number of supersingular j-invariants in F_{p^2}, from the
    /// closed-form count.
    pub expected_count: u64,
    /// The supersingular j-invariants found in F_p, ascending, no
    /// duplicates; length <= expected_count.
    pub found_in_fp: Vec<FpElement>,
    /// Whether every supersingular j-invariant is F_p-rational, i.e.
    /// found_in_fp accounts for the full expected count.
    pub all_rational: bool,
}

impl SupersingularReport {
    /// The found j-values as plain residues.
    pub fn found_values(&self) -> Vec<u64> {
        self.found_in_fp.iter().map(|e| e.value()).collect()
    }
}

/// Number of supersingular j-invariants in characteristic p: 1 for
/// p in {2, 3}, else ⌊p/12⌋ + ε with ε = 0, 1, 1, 2 according to
/// p ≡ 1, 5, 7, 11 (mod 12).
pub fn expected_ss_count(p: &ValidatedPrime) -> u64 {
    let v = p.value();
    if v == 2 || v == 3 {
        return 1;
    }
    let eps = match p.residue_mod_12() {
        1 => 0,
        5 => 1,
        7 => 1,
        11 => 2,
        _ => unreachable!("p >= 5 is coprime to 12"),
    };
    v / 12 + eps
}

/// Short Weierstrass coefficients (A, B) of a curve with j-invariant j
/// over F_p, p >= 5.
fn curve_for_j(j: u64, p: u64) -> (u64, u64) {
    let j1728 = 1728 % p; // nonzero: p >= 5 does not divide 1728 = 2^6 3^3
    if j == 0 {
        (0, 1)
    } else if j == j1728 {
        (1, 0)
    } else {
        let w = (j1728 + p - j) % p;
        let a = mul_mod(3, mul_mod(j, w, p), p);
        let b = mul_mod(2, mul_mod(j, mul_mod(w, w, p), p), p);
        (a, b)
    }
}

/// Whether the j-invariant is supersingular in characteristic p >= 5, by
/// literal point counting: #E(F_p) = p + 1 + Σ_x (x^3 + Ax + B | p) with
/// each Legendre symbol evaluated by Euler's criterion.
///
/// This is the self-contained reference path; the batch scan in
/// [`supersingular_report`] reaches the same sum through precomputed
/// square and cube tables.
pub fn is_supersingular_j_over_fp(j: FpElement) -> Result<bool, Error> {
    let p = j.prime();
    let pv = p.value();
    if pv < 5 {
        return Err(Error::OutOfRange {
            context: "point-counting supersingularity test requires p >= 5",
            value: pv,
        });
    }
    let (a, b) = curve_for_j(j.value(), pv);
    // 4A^3 + 27B^2 != 0: the recipe never produces a singular cubic, so a
    // zero here would mean the recipe itself was transcribed wrongly.
    let disc = (mul_mod(4, mul_mod(a, mul_mod(a, a, pv), pv), pv)
        + mul_mod(27, mul_mod(b, b, pv), pv))
        % pv;
    if disc == 0 {
        return Err(Error::Internal("curve recipe produced a singular cubic"));
    }
    let mut sum = 0i64;
    for x in 0..pv {
        let f = (mul_mod(mul_mod(x, x, pv), x, pv) + mul_mod(a, x, pv) + b) % pv;
        sum += legendre(f as i64, &p)? as i64;
    }
    // trace = -sum; Hasse gives |trace| <= 2 sqrt(p).
    debug_assert!(sum.unsigned_abs() <= 2 * pv.isqrt() + 1);
    Ok(sum % pv as i64 == 0)
}

/// Shared lookup tables for the O(p^2) scan: cubes mod p, and the
/// quadratic-residue indicator stretched to [0, 2p) so that the inner loop
/// can index cube[x] + (Ax + B) without a reduction.
struct ScanTables {
    p: u64,
    cube: Vec<u32>,
    qr_ext: Vec<i8>,
}

fn scan_tables(p: u64) -> ScanTables {
    let n = p as usize;
    let mut qr_ext = vec![-1i8; 2 * n];
    qr_ext[0] = 0;
    qr_ext[n] = 0;
    for x in 1..p {
        let s = mul_mod(x, x, p) as usize;
        qr_ext[s] = 1;
        qr_ext[s + n] = 1;
    }
    let cube = (0..p)
        .map(|x| mul_mod(mul_mod(x, x, p), x, p) as u32)
        .collect();
    ScanTables { p, cube, qr_ext }
}

/// Σ_x (x^3 + Ax + B | p) with Ax + B tracked incrementally; the inner
/// loop is add / compare / table load only. Four interleaved residue
/// strides keep the running Ax + B values independent, so the loads are
/// not serialized behind a single mod-p counter.
fn trace_sum(t: &ScanTables, a: u64, b: u64) -> i64 {
    let p = t.p;
    let n = p as usize;
    let step = (4 * a) % p;
    let mut acc = [b, (b + a) % p, (b + 2 * a) % p, (b + 3 * a) % p];
    let mut sums = [0i64; 4];
    let head = n - n % 4;
    for x in (0..head).step_by(4) {
        for k in 0..4 {
            sums[k] += t.qr_ext[t.cube[x + k] as usize + acc[k] as usize] as i64;
            acc[k] += step;
            if acc[k] >= p {
                acc[k] -= p;
            }
        }
    }
    // At x = head the stride-k value is exactly acc[k] again.
    for (k, x) in (head..n).enumerate() {
        sums[k] += t.qr_ext[t.cube[x] as usize + acc[k] as usize] as i64;
    }
    sums.iter().sum()
}

fn scan_j(t: &ScanTables, j: u64) -> bool {
    let (a, b) = curve_for_j(j, t.p);
    trace_sum(t, a, b) == 0
}

fn assemble_report(p: &ValidatedPrime, mut found: Vec<u64>) -> SupersingularReport {
    // The scans emit j ascending already; sorting keeps the ordering
    // guarantee independent of how the work was scheduled.
    found.sort_unstable();
    let expected_count = expected_ss_count(p);
    debug_assert!(found.len() as u64 <= expected_count);
    let all_rational = found.len() as u64 == expected_count;
    SupersingularReport {
        p: *p,
        expected_count,
        found_in_fp: found.into_iter().map(|j| FpElement::new(*p, j)).collect(),
        all_rational,
    }
}

fn special_small_char_report(p: &ValidatedPrime) -> SupersingularReport {
    // In characteristics 2 and 3 the unique supersingular invariant is 0.
    SupersingularReport {
        p: *p,
        expected_count: 1,
        found_in_fp: vec![FpElement::new(*p, 0)],
        all_rational: true,
    }
}

/// Sequential F_p scan: test every j in F_p and compare the tally with
/// the expected count.
pub fn supersingular_report_seq(p: &ValidatedPrime) -> SupersingularReport {
    let pv = p.value();
    if pv <= 3 {
        return special_small_char_report(p);
    }
    let tables = scan_tables(pv);
    let found = (0..pv).filter(|&j| scan_j(&tables, j)).collect();
    assemble_report(p, found)
}

/// Parallel F_p scan; identical output to the sequential one.
#[cfg(feature = "parallel")]
pub fn supersingular_report_par(p: &ValidatedPrime) -> SupersingularReport {
    let pv = p.value();
    if pv <= 3 {
        return special_small_char_report(p);
    }
    let tables = scan_tables(pv);
    let found = (0..pv)
        .into_par_iter()
        .filter(|&j| scan_j(&tables, j))
        .collect();
    assemble_report(p, found)
}

/// The F_p supersingular scan, parallel when the `parallel` feature is on.
pub fn supersingular_report(p: &ValidatedPrime) -> SupersingularReport {
    #[cfg(feature = "parallel")]
    {
        supersingular_report_par(p)
    }
    #[cfg(not(feature = "parallel"))]
    {
        supersingular_report_seq(p)
    }
}

/// Brute-force oracle: enumerate every j in F_{p^2}, count points of the
/// recipe curve over F_{p^2} by summing the quadratic character of
/// x^3 + Ax + B (character via z^((p^2-1)/2)), and return the j with
/// trace ≡ 0 mod p, in (re, im) lexicographic order.
///
/// O(p^4), guarded to 5 <= p <= 50; exists to validate the count formula
/// and the F_p scan from outside, and is only called from tests.
pub fn oracle_enumerate_fp2(p: &ValidatedPrime) -> Result<Vec<Fp2Element>, Error> {
    let pv = p.value();
    if !(5..=50).contains(&pv) {
        return Err(Error::OutOfRange {
            context: "F_{p^2} brute-force oracle supports 5 <= p <= 50",
            value: pv,
        });
    }
    let field = Fp2::new(*p)?;
    let elements: Vec<Fp2Element> = field.elements().collect();
    // One character evaluation per element, then the p^4 loop is lookups.
    let mut chi = vec![0i8; elements.len()];
    for &z in &elements {
        chi[(z.re() * pv + z.im()) as usize] = field.quadratic_character(z)? as i8;
    }
    let cubes: Vec<Fp2Element> = elements
        .iter()
        .map(|&x| field.mul(field.mul(x, x)?, x))
        .collect::<Result<_, _>>()?;
    let j1728 = field.embed(1728);
    let mut supersingular = Vec::new();
    for &j in &elements {
        let (a, b) = if j.is_zero() {
            (field.zero(), field.one())
        } else if j == j1728 {
            (field.one(), field.zero())
        } else {
            let w = field.sub(j1728, j)?;
            let a = field.mul(field.embed(3), field.mul(j, w)?)?;
            let b = field.mul(field.embed(2), field.mul(j, field.mul(w, w)?)?)?;
            (a, b)
        };
        let mut sum = 0i64;
        for (x, x3) in elements.iter().zip(&cubes) {
            let f = field.add(field.add(*x3, field.mul(a, *x)?)?, b)?;
            sum += chi[(f.re() * pv + f.im()) as usize] as i64;
        }
        // #E(F_{p^2}) = p^2 + 1 + sum, so the trace is -sum; supersingular
        // over F_{p^2} means the trace is divisible by p (it can be +-2p
        // or +-p here, not just 0).
        if sum % pv as i64 == 0 {
            supersingular.push(j);
        }
    }
    Ok(supersingular)
}
