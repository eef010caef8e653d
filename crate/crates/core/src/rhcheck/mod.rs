//! Numerical and exact checks that every zero of a zeta polynomial lies on
//! the circle |T| = 1/√q.

mod aberth;
mod certificate;
mod real;

pub use aberth::{find_roots, ITERATION_CAP};
pub use certificate::{exact_circle_certificate, Certificate};
pub use real::{BigFloat, Cx, Real};

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{check_q, parse_decimal, Rational};
use crate::zeta::ZetaPoly;

pub const DEFAULT_PRECISION_BITS: usize = 256;
pub const DEFAULT_TOLERANCE: &str = "1e-18";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RHVerdict {
    Holds,
    Fails,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootText {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RHReport {
    pub verdict: RHVerdict,
    pub roots: Vec<RootText>,
    /// max over roots of | |T|·√q − 1 |; absent when root finding failed.
    pub max_radial_deviation: Option<f64>,
    pub precision_bits: usize,
    pub tolerance: f64,
}

pub fn default_tolerance() -> Rational {
    parse_decimal(DEFAULT_TOLERANCE).expect("valid literal")
}

/// Parses a tolerance such as `1e-18`; must be positive.
pub fn parse_tolerance(s: &str) -> Result<Rational> {
    match parse_decimal(s) {
        Ok(t) if t.is_positive() => Ok(t),
        _ => Err(Error::InvalidTolerance(s.to_string())),
    }
}

/// Radial deviations `| |z|·√q − 1 |` of the given roots.
pub fn radial_deviations<R: Real>(roots: &[Cx<R>], q: &Rational, bits: usize) -> Vec<R> {
    let qr = R::from_rational(q, bits);
    let one = R::one(bits);
    roots
        .iter()
        .map(|z| ((z.norm_sqr() * qr.clone()).sqrt() - one.clone()).abs())
        .collect()
}

/// Root finding and the radial check in the real type `R`.
pub fn rh_verdict_with<R: Real>(
    p: &ZetaPoly,
    tolerance: &Rational,
    precision_bits: usize,
) -> Result<RHReport> {
    check_q(&p.q)?;
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !tolerance.is_positive() {
        return Err(Error::InvalidTolerance(tolerance.to_string()));
    }
    let bits = R::effective_bits(precision_bits);
    let tol_f = num_traits::ToPrimitive::to_f64(tolerance).unwrap_or(f64::NAN);
    let Some(roots) = find_roots::<R>(&p.poly, precision_bits) else {
        return Ok(RHReport {
            verdict: RHVerdict::Indeterminate,
            roots: Vec::new(),
            max_radial_deviation: None,
            precision_bits: bits,
            tolerance: tol_f,
        });
    };
    let tol = R::from_rational(tolerance, bits);
    let max = radial_deviations(&roots, &p.q, bits)
        .into_iter()
        .fold(R::zero(bits), |m, d| if d > m { d } else { m });
    let verdict = if max <= tol {
        RHVerdict::Holds
    } else {
        RHVerdict::Fails
    };
    let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as usize;
    Ok(RHReport {
        verdict,
        roots: roots
            .iter()
            .map(|z| RootText {
                re: z.re.decimal_text(digits),
                im: z.im.decimal_text(digits),
            })
            .collect(),
        max_radial_deviation: Some(max.approx_f64()),
        precision_bits: bits,
        tolerance: tol_f,
    })
}

/// The numeric RH verdict at the given binary precision.
pub fn rh_verdict(p: &ZetaPoly, tolerance: &Rational, precision_bits: usize) -> Result<RHReport> {
    rh_verdict_with::<BigFloat>(p, tolerance, precision_bits)
}
