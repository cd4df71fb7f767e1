//! Arithmetic in F_p and its quadratic extension F_{p^2}.
//!
//! The extension is realised concretely as F_p[t] / (t^2 - r) with r the
//! smallest positive quadratic non-residue mod p, so every element is a
//! pair (a, b) standing for a + b t. The Frobenius map z -> z^p is computed
//! literally as a p-th power; on this basis it coincides with conjugation
//! a + b t -> a - b t (t^p = r^((p-1)/2) t = -t), which the tests exploit as
//! an independent oracle. An element lies in the base field exactly when
//! Frobenius fixes it.
//!
//! This module backs the brute-force supersingular oracle for small p and
//! the F_p-rationality checks; the production point-counting scan in
//! [`crate::locus`] works directly with machine integers.

use crate::arith::{legendre, mul_mod, pow_mod, ValidatedPrime};
use crate::Error;

/// A residue in the prime field F_p; the constructor reduces mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    p: ValidatedPrime,
    value: u64,
}

impl FpElement {
    pub fn new(p: ValidatedPrime, value: u64) -> Self {
        Self {
            p,
            value: value % p.value(),
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn prime(&self) -> ValidatedPrime {
        self.p
    }
}

impl std::fmt::Display for FpElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The field F_{p^2} = F_p[t] / (t^2 - r), p odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp2 {
    p: ValidatedPrime,
    r: u64,
}

/// An element a + b t of some F_{p^2}; tagged with p so that accidental
/// cross-field arithmetic is caught at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2Element {
    a: u64,
    b: u64,
    p: u64,
}

impl Fp2Element {
    /// Coordinate on 1.
    pub fn re(&self) -> u64 {
        self.a
    }

    /// Coordinate on t.
    pub fn im(&self) -> u64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl std::fmt::Display for Fp2Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}t"),
            (a, b) => write!(f, "{a} + {b}t"),
        }
    }
}

impl Fp2 {
    /// Construct F_{p^2} for an odd prime, choosing r as the smallest
    /// positive quadratic non-residue mod p.
    pub fn new(p: ValidatedPrime) -> Result<Self, Error> {
        if !p.is_odd() {
            return Err(Error::OddPrimeRequired);
        }
        let mut r = 2u64;
        while legendre(r as i64, &p)? != -1 {
            r += 1;
        }
        Ok(Self { p, r })
    }

    pub fn prime(&self) -> ValidatedPrime {
        self.p
    }

    /// The non-residue r with t^2 = r.
    pub fn non_residue(&self) -> u64 {
        self.r
    }

    /// Number of elements, p^2.
    pub fn order(&self) -> u64 {
        self.p.value() * self.p.value()
    }

    /// The element a + b t (coordinates reduced mod p).
    pub fn element(&self, a: u64, b: u64) -> Fp2Element {
        let p = self.p.value();
        Fp2Element {
            a: a % p,
            b: b % p,
            p,
        }
    }

    /// Embed a base-field element.
    pub fn embed(&self, a: u64) -> Fp2Element {
        self.element(a, 0)
    }

    pub fn zero(&self) -> Fp2Element {
        self.element(0, 0)
    }

    pub fn one(&self) -> Fp2Element {
        self.element(1, 0)
    }

    /// The generator t of the extension.
    pub fn t(&self) -> Fp2Element {
        self.element(0, 1)
    }

    fn check(&self, z: Fp2Element) -> Result<(), Error> {
        if z.p == self.p.value() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, x: Fp2Element, y: Fp2Element) -> Result<Fp2Element, Error> {
        self.check(x)?;
        self.check(y)?;
        let p = self.p.value();
        Ok(Fp2Element {
            a: (x.a + y.a) % p,
            b: (x.b + y.b) % p,
            p,
        })
    }

    pub fn neg(&self, z: Fp2Element) -> Result<Fp2Element, Error> {
        self.check(z)?;
        let p = self.p.value();
        Ok(Fp2Element {
            a: (p - z.a) % p,
            b: (p - z.b) % p,
            p,
        })
    }

    pub fn sub(&self, x: Fp2Element, y: Fp2Element) -> Result<Fp2Element, Error> {
        self.add(x, self.neg(y)?)
    }

    /// (a + bt)(c + dt) = (ac + r bd) + (ad + bc) t.
    pub fn mul(&self, x: Fp2Element, y: Fp2Element) -> Result<Fp2Element, Error> {
        self.check(x)?;
        self.check(y)?;
        let p = self.p.value();
        let ac = mul_mod(x.a, y.a, p);
        let bd = mul_mod(x.b, y.b, p);
        let ad = mul_mod(x.a, y.b, p);
        let bc = mul_mod(x.b, y.a, p);
        Ok(Fp2Element {
            a: (ac + mul_mod(self.r, bd, p)) % p,
            b: (ad + bc) % p,
            p,
        })
    }

    /// z^e by square-and-multiply.
    pub fn pow(&self, z: Fp2Element, mut e: u64) -> Result<Fp2Element, Error> {
        self.check(z)?;
        let mut base = z;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base)?;
            }
            base = self.mul(base, base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Norm a^2 - r b^2 down to F_p; multiplicative, zero only at zero.
    pub fn norm(&self, z: Fp2Element) -> Result<u64, Error> {
        self.check(z)?;
        let p = self.p.value();
        let a2 = mul_mod(z.a, z.a, p);
        let rb2 = mul_mod(self.r, mul_mod(z.b, z.b, p), p);
        Ok((a2 + p - rb2) % p)
    }

    /// Multiplicative inverse, conj(z) / norm(z). Fails on zero.
    pub fn inv(&self, z: Fp2Element) -> Result<Fp2Element, Error> {
        self.check(z)?;
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.p.value();
        let n = self.norm(z)?;
        // n != 0 since the norm form is anisotropic (r is a non-residue),
        // so Fermat gives the inverse of n in F_p.
        let n_inv = pow_mod(n, p - 2, p);
        let conj = self.conjugate(z)?;
        Ok(Fp2Element {
            a: mul_mod(conj.a, n_inv, p),
            b: mul_mod(conj.b, n_inv, p),
            p,
        })
    }

    pub fn div(&self, x: Fp2Element, y: Fp2Element) -> Result<Fp2Element, Error> {
        self.mul(x, self.inv(y)?)
    }

    /// Conjugation a + b t -> a - b t.
    pub fn conjugate(&self, z: Fp2Element) -> Result<Fp2Element, Error> {
        self.check(z)?;
        let p = self.p.value();
        Ok(Fp2Element {
            a: z.a,
            b: (p - z.b) % p,
            p,
        })
    }

    /// The Frobenius z -> z^p, computed as a literal p-th power.
    pub fn frobenius(&self, z: Fp2Element) -> Result<Fp2Element, Error> {
        self.pow(z, self.p.value())
    }

    /// Whether z lies in the base field, i.e. is fixed by Frobenius.
    pub fn is_in_base_field(&self, z: Fp2Element) -> Result<bool, Error> {
        Ok(self.frobenius(z)? == z)
    }

    /// Quadratic character of F_{p^2}: 0 at zero, else z^((p^2 - 1)/2),
    /// which lands in {1, -1}.
    pub fn quadratic_character(&self, z: Fp2Element) -> Result<i32, Error> {
        self.check(z)?;
        if z.is_zero() {
            return Ok(0);
        }
        let e = (self.order() - 1) / 2;
        let w = self.pow(z, e)?;
        if w == self.one() {
            Ok(1)
        } else if w == self.neg(self.one())? {
            Ok(-1)
        } else {
            Err(Error::Internal("quadratic character outside {0, 1, -1}"))
        }
    }

    /// All p^2 elements, (a, b) in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Fp2Element> + '_ {
        let p = self.p.value();
        (0..p).flat_map(move |a| (0..p).map(move |b| Fp2Element { a, b, p }))
    }
}
