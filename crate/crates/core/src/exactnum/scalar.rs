use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rational_sqrt, Rational};

/// Coefficient field for polynomials and linear algebra.
///
/// Exact implementors (`Rational`, [`QScalar`](super::QScalar) and the
/// ω-tower used by the conjugated transform) give exact answers; the float
/// implementations exist for quick numeric evaluation and report no rational
/// value.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// √q inside this scalar type, if representable.
    fn sqrt_of(q: &Rational) -> Option<Self>;

    /// The exact rational value, when there is one.
    fn to_rational(&self) -> Option<Rational>;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    /// True when the value prints with a leading minus sign.
    fn is_negative_display(&self) -> bool {
        false
    }

    /// True when the printed form needs parentheses as a coefficient.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn sqrt_of(q: &Rational) -> Option<Self> {
        rational_sqrt(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn is_negative_display(&self) -> bool {
        self.is_negative()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_rational(r: &Rational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn sqrt_of(q: &Rational) -> Option<Self> {
                Some(Self::from_rational(q).sqrt())
            }

            fn to_rational(&self) -> Option<Rational> {
                None
            }

            fn is_negative_display(&self) -> bool {
                *self < 0.0
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);
