//! The genus of X_0(p), the Fricke quotient X_0(p)+, and the dimension of
//! its space of weight-2 forms.
//!
//! For prime level the classical genus formula reads
//! g = 1 + μ/12 - ν2/4 - ν3/3 - ν∞/2 with index μ = p + 1, elliptic-point
//! counts ν2, ν3 determined by Legendre symbols, and ν∞ = 2 cusps. The
//! Fricke involution w interchanges the two cusps, and its fixed points on
//! X_0(p) correspond to classes of binary quadratic forms: h(-4p) of them
//! for p ≡ 1 (mod 4), h(-p) + h(-4p) for p ≡ 3 (mod 4), and 2 for p = 2.
//! Riemann-Hurwitz for the degree-2 quotient then gives
//! g+ = (2g + 2 - f) / 4.
//!
//! Because the two cusps are interchanged, X_0(p)+ has a single cusp, and
//! the space of weight-2 modular forms for the extended group has dimension
//! g + m - 1 = g+. That number is compared elsewhere against the Jacobi
//! cusp-form dimension, which checks every formula in this module at every
//! prime: a wrong ν-branch or a wrong fixed-point branch breaks the
//! equality almost everywhere.
//!
//! All genus arithmetic runs in exact rationals and asserts integrality;
//! the Riemann-Hurwitz step asserts divisibility by 4. Either assertion
//! firing means a transcription bug, not bad input.

use num_rational::Ratio;

use crate::arith::{legendre, ValidatedPrime};
use crate::quadform::{class_number, Discriminant};

/// Genus data of X_0(p) and its Fricke quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusProfile {
    pub p: ValidatedPrime,
    /// Index [PSL_2(Z) : Γ_0(p)] = p + 1.
    pub index_mu: u64,
    /// Number of elliptic points of order 2.
    pub nu2: u64,
    /// Number of elliptic points of order 3.
    pub nu3: u64,
    /// Number of cusps; 2 for every prime level.
    pub nu_inf: u64,
    /// Genus of X_0(p).
    pub genus: u64,
    /// Fixed points of the Fricke involution on X_0(p).
    pub fricke_fixed_points: u64,
    /// Genus of the quotient X_0(p)+.
    pub genus_plus: u64,
    /// dim M_2(Γ_0(p)+) = g + m - 1 with m = 1 cusp.
    pub dim_weight2_plus: u64,
}

/// Full profile of X_0(p) and X_0(p)+ for one prime.
pub fn genus_x0(p: &ValidatedPrime) -> GenusProfile {
    let pv = p.value();
    let index_mu = pv + 1;
    let nu_inf = 2u64;
    let (nu2, nu3) = match pv {
        2 => (1, 0),
        3 => (0, 1), // legendre(-1, 3) = -1 makes nu2 = 0; nu3 special
        _ => (
            (1 + legendre(-1, p).expect("p odd")) as u64,
            (1 + legendre(-3, p).expect("p odd")) as u64,
        ),
    };

    let genus = Ratio::from_integer(1i64) + Ratio::new(index_mu as i64, 12)
        - Ratio::new(nu2 as i64, 4)
        - Ratio::new(nu3 as i64, 3)
        - Ratio::new(nu_inf as i64, 2);
    assert!(
        genus.is_integer() && genus >= Ratio::from_integer(0),
        "genus formula must give a nonnegative integer at p = {pv}, got {genus}"
    );
    let genus = genus.to_integer() as u64;

    let fricke_fixed_points = fricke_fixed_points(p);

    // Riemann-Hurwitz for the degree-2 quotient: 2g - 2 = 2(2g+ - 2) + f.
    let numerator = 2 * genus as i64 + 2 - fricke_fixed_points as i64;
    assert!(
        numerator >= 0 && numerator % 4 == 0,
        "Riemann-Hurwitz inconsistency at p = {pv}: 2g + 2 - f = {numerator}"
    );
    let genus_plus = (numerator / 4) as u64;

    GenusProfile {
        p: *p,
        index_mu,
        nu2,
        nu3,
        nu_inf,
        genus,
        fricke_fixed_points,
        genus_plus,
        dim_weight2_plus: genus_plus,
    }
}

/// Number of fixed points of the Fricke involution on X_0(p), from class
/// numbers of the orders of discriminant -p and -4p.
pub fn fricke_fixed_points(p: &ValidatedPrime) -> u64 {
    let pv = p.value() as i64;
    match p.residue_mod_4() {
        // p = 2: h(-4) + h(-8) = 2, recorded as a constant special case.
        2 => 2,
        1 => class_number(Discriminant::new(-4 * pv).expect("-4p is 0 mod 4")),
        3 => {
            class_number(Discriminant::new(-pv).expect("-p is 1 mod 4"))
                + class_number(Discriminant::new(-4 * pv).expect("-4p is 0 mod 4"))
        }
        _ => unreachable!("prime residues mod 4"),
    }
}

/// Genus of the Fricke quotient X_0(p)+.
pub fn genus_plus(p: &ValidatedPrime) -> u64 {
    genus_x0(p).genus_plus
}

/// dim M_2(Γ_0(p)+): equals the quotient genus, by g + m - 1 with one cusp.
pub fn dim_weight2_plus(p: &ValidatedPrime) -> u64 {
    genus_x0(p).genus_plus
}
