use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactnum::{Rational, Scalar};

/// `u + v·ω` over a real base field, with ω a primitive cube root of unity
/// (ω² = −1 − ω).
#[derive(Clone, Debug, PartialEq)]
pub struct Omega<S> {
    pub u: S,
    pub v: S,
}

impl<S: Scalar> Omega<S> {
    pub fn new(u: S, v: S) -> Self {
        Self { u, v }
    }

    pub fn from_base(u: S) -> Self {
        Self { u, v: S::zero() }
    }

    pub fn omega() -> Self {
        Self::new(S::zero(), S::one())
    }

    /// ω^k.
    pub fn omega_pow(k: usize) -> Self {
        match k % 3 {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::new(-S::one(), -S::one()),
        }
    }

    /// The base-field value when the ω part vanishes.
    pub fn to_base(&self) -> Option<S> {
        self.v.is_zero().then(|| self.u.clone())
    }

    /// `(u + vω)(u + vω²) = u² − uv + v²`.
    pub fn norm(&self) -> S {
        self.u
            .mul_ref(&self.u)
            .sub_ref(&self.u.mul_ref(&self.v))
            .add_ref(&self.v.mul_ref(&self.v))
    }

    /// Complex conjugate `u + vω² = (u − v) − vω`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.u.sub_ref(&self.v), -self.v.clone())
    }
}

impl<S: Scalar> Add for Omega<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.u + o.u, self.v + o.v)
    }
}

impl<S: Scalar> Sub for Omega<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.u - o.u, self.v - o.v)
    }
}

impl<S: Scalar> Mul for Omega<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let uu = self.u.mul_ref(&o.u);
        let vv = self.v.mul_ref(&o.v);
        let cross = self.u.mul_ref(&o.v).add_ref(&self.v.mul_ref(&o.u));
        Self::new(uu.sub_ref(&vv), cross.sub_ref(&vv))
    }
}

impl<S: Scalar> Div for Omega<S> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        let p = self * o.conjugate();
        Self::new(p.u / n.clone(), p.v / n)
    }
}

impl<S: Scalar> Neg for Omega<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.u, -self.v)
    }
}

impl<S: Scalar> Zero for Omega<S> {
    fn zero() -> Self {
        Self::new(S::zero(), S::zero())
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl<S: Scalar> One for Omega<S> {
    fn one() -> Self {
        Self::new(S::one(), S::zero())
    }
}

impl<S: Scalar> Scalar for Omega<S> {
    fn from_rational(r: &Rational) -> Self {
        Self::from_base(S::from_rational(r))
    }

    fn sqrt_of(q: &Rational) -> Option<Self> {
        S::sqrt_of(q).map(Self::from_base)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.to_base().and_then(|u| u.to_rational())
    }

    fn is_negative_display(&self) -> bool {
        self.v.is_zero() && self.u.is_negative_display()
    }

    fn is_compound(&self) -> bool {
        !self.v.is_zero() || self.u.is_compound()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Omega<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "{} + ({})*w", self.u, self.v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    type W = Omega<Rational>;

    #[test]
    fn cube_root_of_unity() {
        let w = W::omega();
        let w2 = w.clone() * w.clone();
        assert_eq!(w2, W::new(int(-1), int(-1)));
        assert_eq!(w2.clone() * w.clone(), W::one());
        // 1 + ω + ω² = 0
        assert!((W::one() + w + w2).is_zero());
        assert_eq!(W::omega_pow(5), W::omega_pow(2));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = W::new(rat(3, 2), int(-1));
        let b = W::new(int(2), rat(5, 7));
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert_eq!(b.norm(), (b.clone() * b.conjugate()).to_base().unwrap());
    }
}
