//! Integer polynomials in the symbol q, and quotients of them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::exactnum::Rational;
use crate::unipoly::UniPoly;

/// Polynomial in q with big-integer coefficients, ascending, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c·q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeff(i) + o.coeff(i))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeff(i) - o.coeff(i))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Division that must be exact over Z; panics otherwise.
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return Self::zero();
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (qk, r) = rem[k + dd].div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * c;
            }
            quot[k] = qk;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::new(quot)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + Rational::from_integer(c.clone()))
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_unipoly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Primitive integer polynomial proportional to a rational one.
    pub fn from_unipoly(p: &UniPoly<Rational>) -> Self {
        let l = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let l = Rational::from_integer(l);
        Self::new(p.coeffs().iter().map(|c| (c * &l).to_integer()).collect()).primitive()
    }

    /// Monic gcd over Q, returned as a primitive integer polynomial.
    pub fn gcd(&self, o: &Self) -> Self {
        Self::from_unipoly(&self.to_unipoly().gcd(&o.to_unipoly()))
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `2q^2 - 5q + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            match (first, a.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `num/den` in lowest terms with a primitive, positive-leading denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: QPoly,
    pub den: QPoly,
}

impl RatFn {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self {
                num,
                den: QPoly::constant(1),
            };
        }
        let g = num.gcd(&den).to_unipoly();
        let qn = num.to_unipoly().div_rem(&g).0;
        let qd = den.to_unipoly().div_rem(&g).0;
        // clear denominators with one common factor so the ratio is kept
        let l = qn
            .coeffs()
            .iter()
            .chain(qd.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let l = Rational::from_integer(l);
        let to_int = |p: &UniPoly<Rational>| {
            QPoly::new(p.coeffs().iter().map(|c| (c * &l).to_integer()).collect())
        };
        let (mut n, mut d) = (to_int(&qn), to_int(&qd));
        let common = n.content().gcd(&d.content());
        n = QPoly::new(n.coeffs.iter().map(|c| c / &common).collect());
        d = QPoly::new(d.coeffs.iter().map(|c| c / &common).collect());
        if d.coeffs.last().unwrap().is_negative() {
            n = QPoly::new(n.coeffs.iter().map(|c| -c).collect());
            d = QPoly::new(d.coeffs.iter().map(|c| -c).collect());
        }
        Self { num: n, den: d }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self::new(p, QPoly::constant(1))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.den.eval(q);
        (!d.is_zero()).then(|| self.num.eval(q) / d)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::constant(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for RatFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
