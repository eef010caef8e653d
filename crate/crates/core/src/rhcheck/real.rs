//! Working-precision reals and a minimal complex type on top of them.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};

use crate::exactnum::Rational;

/// Binary arbitrary-precision float.
pub type BigFloat = FBig<HalfEven, 2>;

/// A real field with a notion of working precision. `f64` ignores the
/// requested precision.
pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Effective mantissa bits for a requested precision.
    fn effective_bits(requested: usize) -> usize;
    fn from_rational(r: &Rational, bits: usize) -> Self;
    fn from_f64(x: f64, bits: usize) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn approx_f64(&self) -> f64;
    /// Decimal text with about `digits` significant digits.
    fn decimal_text(&self, digits: usize) -> String;

    fn zero(bits: usize) -> Self {
        Self::from_f64(0.0, bits)
    }

    fn one(bits: usize) -> Self {
        Self::from_f64(1.0, bits)
    }

    /// 2^-k at the given precision.
    fn pow2_neg(k: usize, bits: usize) -> Self {
        let mut r = Self::one(bits);
        let half = Self::from_f64(0.5, bits);
        for _ in 0..k {
            r = r * half.clone();
        }
        r
    }
}

impl Real for f64 {
    fn effective_bits(_: usize) -> usize {
        53
    }
    fn from_rational(r: &Rational, _: usize) -> Self {
        num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn from_f64(x: f64, _: usize) -> Self {
        x
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn approx_f64(&self) -> f64 {
        *self
    }
    fn decimal_text(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1).min(16), self)
    }
}

pub fn bigint_to_ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

fn limited(x: BigFloat, bits: usize) -> BigFloat {
    x.with_precision(bits).value()
}

impl Real for BigFloat {
    fn effective_bits(requested: usize) -> usize {
        requested.max(64)
    }
    fn from_rational(r: &Rational, bits: usize) -> Self {
        let n = limited(BigFloat::from(bigint_to_ibig(r.numer())), bits);
        let d = limited(BigFloat::from(bigint_to_ibig(r.denom())), bits);
        n / d
    }
    fn from_f64(x: f64, bits: usize) -> Self {
        limited(BigFloat::try_from(x).expect("finite f64"), bits)
    }
    fn sqrt(&self) -> Self {
        FBig::sqrt(self)
    }
    fn abs(&self) -> Self {
        if *self < BigFloat::ZERO {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn approx_f64(&self) -> f64 {
        FBig::to_f64(self).value()
    }
    fn decimal_text(&self, digits: usize) -> String {
        self.clone()
            .with_base_and_precision::<10>(digits)
            .value()
            .to_string()
    }
}

/// `re + i·im`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cx<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cx<R> {
    pub fn new(re: R, im: R) -> Self {
        Self { re, im }
    }

    pub fn norm_sqr(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn abs(&self) -> R {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(self.re.clone() * s.clone(), self.im.clone() * s.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.re.clone() + o.re.clone(), self.im.clone() + o.im.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.re.clone() - o.re.clone(), self.im.clone() - o.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re.clone() * o.im.clone() + self.im.clone() * o.re.clone(),
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sqr();
        let p = self.mul(&Self::new(o.re.clone(), -o.im.clone()));
        Self::new(p.re / n.clone(), p.im / n)
    }
}
