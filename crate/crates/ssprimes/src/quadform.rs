//! Class numbers of imaginary quadratic orders by direct enumeration of
//! reduced binary quadratic forms.
//!
//! A positive-definite form ax^2 + bxy + cy^2 of discriminant D = b^2 - 4ac
//! is reduced when |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
//! Each proper equivalence class contains exactly one reduced form, so the
//! class number h(D) is the count of reduced primitive forms. Since
//! 3a^2 <= 4ac - b^2 = |D| forces a <= sqrt(|D|/3), the enumeration is a
//! short double loop — entirely adequate for the discriminants -p and -4p
//! that the Fricke fixed-point count needs.

use num_integer::Integer;

use crate::Error;

/// Enumeration stays fast and overflow-safe below this magnitude; the
/// largest discriminant the library itself asks for is 4 * 10^6.
const MAX_DISCRIMINANT_MAGNITUDE: i64 = 1 << 24;

/// A negative discriminant, validated to satisfy D = 0 or 1 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self, Error> {
        if d >= 0 || d.rem_euclid(4) > 1 {
            return Err(Error::InvalidDiscriminant(d));
        }
        if -d > MAX_DISCRIMINANT_MAGNITUDE {
            return Err(Error::DiscriminantTooLarge(d));
        }
        Ok(Self(d))
    }

    pub fn value(&self) -> i64 {
        self.0
    }

    /// |D| as an unsigned value.
    pub fn magnitude(&self) -> u64 {
        (-self.0) as u64
    }
}

/// A reduced primitive positive-definite form (a, b, c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ReducedForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }
}

impl std::fmt::Display for ReducedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// All reduced primitive forms of discriminant D, sorted lexicographically
/// by (a, b).
pub fn enumerate_reduced_forms(d: Discriminant) -> Vec<ReducedForm> {
    let dv = d.value();
    let mag = -dv;
    let mut forms = Vec::new();
    let a_bound = ((mag / 3) as f64).sqrt() as i64 + 1;
    for a in 1..=a_bound {
        if 3 * a * a > mag {
            break;
        }
        // b = D mod 2 and |b| <= a.
        for b in -a..=a {
            if (b - dv) % 2 != 0 {
                continue;
            }
            let num = b * b - dv;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            // Boundary forms keep only the b >= 0 representative.
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            if a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            forms.push(ReducedForm { a, b, c });
        }
    }
    forms
}

/// Class number h(D): the number of reduced primitive forms.
pub fn class_number(d: Discriminant) -> u64 {
    enumerate_reduced_forms(d).len() as u64
}
