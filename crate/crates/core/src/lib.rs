//! Formal weight enumerators: exact MacWilliams transforms, zeta
//! polynomials and their Riemann hypothesis, binomial-moment searches for
//! new invariant families, and extremal elements of the classical rings.
//!
//! Polynomials are generic over the coefficient type through
//! [`exactnum::Scalar`]; the aliases below fix the common choices.

pub mod duality;
pub mod error;
pub mod exactnum;
pub mod homopoly;
pub mod linalg;
pub mod momentsearch;
pub mod rhcheck;
pub mod ringlab;
pub mod unipoly;
pub mod zeta;

pub use error::{Error, Result};
pub use exactnum::{QScalar, Rational};
pub use homopoly::HomoPoly;

/// Forms with rational coefficients.
pub type Poly = HomoPoly<Rational>;
/// Forms over Q(√q), needed for odd degrees.
pub type SurdPoly = HomoPoly<QScalar>;
/// Floating-point forms for quick numerical work.
pub type FloatPoly = HomoPoly<f64>;
pub type FloatPoly32 = HomoPoly<f32>;
