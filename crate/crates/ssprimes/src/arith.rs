//! Exact integer utilities shared by every other module: deterministic
//! primality, Legendre symbols by Euler's criterion, floor division, and
//! reduction of a large decimal constant modulo a small integer.
//!
//! Everything here is a pure function on machine integers. Products are
//! widened to `u128` before reduction, so results are exact for any modulus
//! below 2^64; the public prime type caps its value at 2^32, which leaves
//! ample headroom for squares and small multiples downstream.

use crate::Error;

/// Primes at or above this bound go through Miller-Rabin; below it trial
/// division is cheaper than the witness loop.
const TRIAL_DIVISION_BOUND: u64 = 10_000;

/// Witness set making Miller-Rabin deterministic for every n < 2^64
/// (in fact for n < 3.3 * 10^24).
const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// (a * b) mod m without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square-and-multiply. `m` must be nonzero.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

fn trial_division(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn miller_rabin(n: u64) -> bool {
    debug_assert!(n > 2 && n % 2 == 1);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MILLER_RABIN_WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality test, exact for all n < 2^64.
///
/// Trial division below 10^4, Miller-Rabin with a fixed witness set above.
/// Returns false for 0 and 1.
pub fn is_prime(n: u64) -> bool {
    if n < TRIAL_DIVISION_BOUND {
        trial_division(n)
    } else if n.is_multiple_of(2) {
        false
    } else {
        miller_rabin(n)
    }
}

/// Smallest prime factor of a composite n >= 2. Returns n itself for primes.
pub fn smallest_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// All primes <= bound in ascending order (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

/// A certified prime below 2^32 with its residues mod 4 and mod 12 cached.
///
/// Construction runs the deterministic primality test, so holding a
/// `ValidatedPrime` is proof of primality everywhere downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValidatedPrime {
    value: u64,
    mod4: u8,
    mod12: u8,
}

impl ValidatedPrime {
    /// Certify `value` as prime. Composite inputs report their smallest
    /// factor; 0 and 1 are rejected without one.
    pub fn new(value: u64) -> Result<Self, Error> {
        if value < 2 {
            return Err(Error::NotPrime {
                value,
                factor: None,
            });
        }
        if value >= 1 << 32 {
            return Err(Error::PrimeTooLarge(value));
        }
        if !is_prime(value) {
            return Err(Error::NotPrime {
                value,
                factor: Some(smallest_factor(value)),
            });
        }
        Ok(Self {
            value,
            mod4: (value % 4) as u8,
            mod12: (value % 12) as u8,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// value mod 4; one of {1, 2, 3}.
    pub fn residue_mod_4(&self) -> u64 {
        self.mod4 as u64
    }

    /// value mod 12; one of {1, 2, 3, 5, 7, 11}.
    pub fn residue_mod_12(&self) -> u64 {
        self.mod12 as u64
    }

    pub fn is_odd(&self) -> bool {
        self.value != 2
    }
}

impl std::fmt::Display for ValidatedPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Legendre symbol (a | p) for an odd certified prime, by Euler's criterion
/// a^((p-1)/2) mod p. Rejects p = 2.
pub fn legendre(a: i64, p: &ValidatedPrime) -> Result<i32, Error> {
    if !p.is_odd() {
        return Err(Error::OddPrimeRequired);
    }
    let pv = p.value();
    let r = a.rem_euclid(pv as i64) as u64;
    let t = pow_mod(r, (pv - 1) / 2, pv);
    // Euler's criterion yields 0, 1, or p-1; anything else would mean pv is
    // not prime, which the ValidatedPrime certificate excludes.
    Ok(match t {
        0 => 0,
        1 => 1,
        t if t == pv - 1 => -1,
        _ => unreachable!("Euler criterion on a certified prime"),
    })
}

/// A nonnegative integer as a base-10 digit sequence, most significant
/// digit first. The only representation with a leading zero is "0" itself.
///
/// This is the carrier for the 54-digit Monster order: large enough that it
/// does not fit machine integers, while every operation we need on it
/// (residue mod a small integer, multiplication by a small integer) works
/// digit by digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalConstant {
    digits: Vec<u8>,
}

impl DecimalConstant {
    /// Parse from a decimal string.
    pub fn parse(s: &str) -> Result<Self, Error> {
        if s.is_empty() {
            return Err(Error::InvalidDecimal("empty digit sequence"));
        }
        let mut digits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch.to_digit(10) {
                Some(d) => digits.push(d as u8),
                None => return Err(Error::InvalidDecimal("non-digit character")),
            }
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(Error::InvalidDecimal("leading zero"));
        }
        Ok(Self { digits })
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn num_digits(&self) -> usize {
        self.digits.len()
    }
}

impl std::fmt::Display for DecimalConstant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", d)?;
        }
        Ok(())
    }
}

/// Residue of the represented integer mod m, by left-to-right Horner
/// reduction. Exact for every m below 2^32; rejects m = 0.
pub fn decimal_mod(c: &DecimalConstant, m: u64) -> Result<u64, Error> {
    if m == 0 {
        return Err(Error::DivisionByZero);
    }
    if m >= 1 << 32 {
        return Err(Error::ModulusTooLarge(m));
    }
    // r < 2^32, so 10r + 9 < 2^36: no overflow.
    let mut r = 0u64;
    for &d in c.digits() {
        r = (r * 10 + d as u64) % m;
    }
    Ok(r)
}

/// Exact floor division a / b; rejects b = 0.
pub fn floor_div(a: u64, b: u64) -> Result<u64, Error> {
    if b == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}
