//! The six two-generator rings, their graded pieces, the bound formulas,
//! extremal enumerators, and the differential-operator checks.

mod extremal;
mod operators;

pub use extremal::{bound_survey, extremal, rh_sweep, ExtremalResult, RhSweepRow, SurveyRow};
pub use operators::{okuda_star, prop21_check, Prop21Verdict};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::duality::{classify, VerdictKind};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, QScalar, Rational};
use crate::homopoly::{parse_poly, HomoPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RingName {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    R32,
    R32minus,
}

impl RingName {
    pub const ALL: [RingName; 6] = [
        RingName::TypeI,
        RingName::TypeII,
        RingName::TypeIII,
        RingName::TypeIV,
        RingName::R32,
        RingName::R32minus,
    ];

    /// Whether the bound for this ring is only conjectured.
    pub fn conjectural(self) -> bool {
        matches!(self, RingName::R32 | RingName::R32minus)
    }
}

impl fmt::Display for RingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingName::TypeI => "TypeI",
            RingName::TypeII => "TypeII",
            RingName::TypeIII => "TypeIII",
            RingName::TypeIV => "TypeIV",
            RingName::R32 => "R32",
            RingName::R32minus => "R32minus",
        };
        f.write_str(s)
    }
}

impl FromStr for RingName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "typei" | "i" => RingName::TypeI,
            "typeii" | "ii" => RingName::TypeII,
            "typeiii" | "iii" => RingName::TypeIII,
            "typeiv" | "iv" => RingName::TypeIV,
            "r32" => RingName::R32,
            "r32minus" | "r32m" => RingName::R32minus,
            _ => return Err(Error::UnknownRing(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub name: &'static str,
    pub poly: HomoPoly<Rational>,
    /// +1 for σ_q-invariant, −1 for anti-invariant.
    pub character: i8,
}

impl Generator {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingSpec {
    pub name: RingName,
    pub q: Rational,
    pub c: usize,
    pub gens: [Generator; 2],
    /// Character of the elements of interest: −1 for formal weight
    /// enumerators, +1 for invariant polynomials.
    pub target_sign: i8,
}

pub const W22: &str = "x^2 + y^2";
pub const PHI4: &str = "x^4 - 6x^2y^2 + y^4";
pub const W_H8: &str = "x^8 + 14x^4y^4 + y^8";
pub const W12: &str = "x^12 - 33x^8y^4 - 33x^4y^8 + y^12";
pub const W4: &str = "x^4 + 8xy^3";
pub const PSI6: &str = "x^6 - 20x^3y^3 - 8y^6";
pub const W24: &str = "x^2 + 3y^2";
pub const PHI3: &str = "x^3 - 9xy^2";
pub const ETA6: &str = "x^6 + 5/2 x^3y^3 - 1/8 y^6";
pub const ETA12: &str = "x^12 - 11x^9y^3 - 11/8 x^3y^9 - 1/64 y^12";
pub const ETA24: &str = "x^24 + 253/4 x^18y^6 + 1265/32 x^15y^9 + 7659/256 x^12y^12 \
                         - 1265/256 x^9y^15 + 253/256 x^6y^18 + 1/4096 y^24";

/// Character of `w` under σ_q, computed rather than assumed.
fn character(name: &'static str, w: &HomoPoly<Rational>, q: &Rational) -> Result<i8> {
    let lifted = w.map(|c| QScalar::from(c.clone()));
    match classify(&lifted, q)?.kind {
        VerdictKind::Invariant => Ok(1),
        VerdictKind::AntiInvariant => Ok(-1),
        VerdictKind::Neither => Err(Error::GeneratorCharacter {
            name: name.to_string(),
            q: q.to_string(),
        }),
    }
}

fn generator(name: &'static str, text: &str, q: &Rational) -> Result<Generator> {
    let poly = parse_poly(text)?;
    let character = character(name, &poly, q)?;
    Ok(Generator {
        name,
        poly,
        character,
    })
}

impl RingSpec {
    pub fn new(name: RingName) -> Result<Self> {
        let (q, c, g1, g2, target_sign) = match name {
            RingName::TypeI => (int(2), 2, ("W22", W22), ("phi4", PHI4), -1),
            RingName::TypeII => (int(2), 4, ("W_H8", W_H8), ("W12", W12), -1),
            RingName::TypeIII => (int(3), 3, ("W4", W4), ("psi6", PSI6), -1),
            RingName::TypeIV => (int(4), 2, ("W24", W24), ("phi3", PHI3), -1),
            RingName::R32 => (rat(3, 2), 3, ("eta6", ETA6), ("eta24", ETA24), 1),
            RingName::R32minus => (rat(3, 2), 3, ("eta6", ETA6), ("eta12", ETA12), -1),
        };
        let gens = [generator(g1.0, g1.1, &q)?, generator(g2.0, g2.1, &q)?];
        Ok(Self {
            name,
            q,
            c,
            gens,
            target_sign,
        })
    }

    pub fn all() -> Result<Vec<Self>> {
        RingName::ALL.iter().map(|&n| Self::new(n)).collect()
    }

    /// Exponent pairs `(a, b)` of `g1^a g2^b` in degree n with the given
    /// character, b ascending.
    pub fn monomial_exponents(&self, n: usize, sign: i8) -> Vec<(usize, usize)> {
        let (d1, d2) = (self.gens[0].degree(), self.gens[1].degree());
        let (c1, c2) = (self.gens[0].character, self.gens[1].character);
        (0..=n / d2)
            .filter_map(|b| {
                let rest = n - b * d2;
                rest.is_multiple_of(d1).then_some((rest / d1, b))
            })
            .filter(|&(a, b)| {
                let chi = if a % 2 == 1 { c1 } else { 1 } * if b % 2 == 1 { c2 } else { 1 };
                chi == sign.signum()
            })
            .collect()
    }

    pub fn graded_basis(&self, n: usize, sign: i8) -> Vec<HomoPoly<Rational>> {
        self.monomial_exponents(n, sign)
            .into_iter()
            .map(|(a, b)| {
                self.gens[0]
                    .poly
                    .pow(a as u32)
                    .mul(&self.gens[1].poly.pow(b as u32))
            })
            .collect()
    }

    /// The ring has a nonzero element of degree n, of either character.
    pub fn is_admissible(&self, n: usize) -> bool {
        !self.monomial_exponents(n, 1).is_empty() || !self.monomial_exponents(n, -1).is_empty()
    }

    /// The graded piece of degree n with the target character is nonzero.
    pub fn has_target_piece(&self, n: usize) -> bool {
        !self.monomial_exponents(n, self.target_sign).is_empty()
    }

    /// `coef·⌊(n − offset)/period⌋ + coef`, the bound on d for this ring.
    pub fn ms_bound(&self, n: usize) -> Result<i64> {
        if !self.is_admissible(n) {
            return Err(Error::InadmissibleDegree {
                ring: self.name.to_string(),
                degree: n,
            });
        }
        let (coef, offset, period) = match self.name {
            RingName::TypeI => (2, 4, 8),
            RingName::TypeII => (4, 12, 24),
            RingName::TypeIII => (3, 6, 12),
            RingName::TypeIV => (2, 3, 6),
            RingName::R32 => (3, 0, 24),
            RingName::R32minus => (3, 12, 24),
        };
        Ok(coef * (n as i64 - offset).div_euclid(period) + coef)
    }
}
