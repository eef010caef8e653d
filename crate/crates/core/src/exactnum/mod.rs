//! Exact scalars: arbitrary-precision rationals, the quadratic extension
//! Q(√q), binomial coefficients and Pochhammer symbols.

mod qscalar;
mod scalar;
pub mod serde_text;

pub use qscalar::{qscalar_arith, ArithOp, QContext, QScalar};
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Shorthand constructor `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"-p/q"` or an integer string. Surrounding whitespace is
/// ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses a decimal such as `"1e-18"`, `"0.25"` or `"-3.5E2"` exactly.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    if let Ok(r) = parse_rational(t) {
        return Ok(r);
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}0").parse().map_err(|_| bad())?;
    let scale = exp - fp.len() as i32 - 1;
    let ten = Rational::from_integer(BigInt::from(10));
    let mut r = Rational::from_integer(digits) * pow_rational(&ten, scale);
    if neg {
        r = -r;
    }
    Ok(r)
}

/// `base^e` for any integer exponent. Panics on `0^negative`.
pub fn pow_rational(base: &Rational, e: i32) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Exact square root of a rational when it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Checks the q context used throughout: q > 0 and q != 1.
pub fn check_q(q: &Rational) -> Result<()> {
    if q.is_positive() && !q.is_one() {
        Ok(())
    } else {
        Err(Error::InvalidQ(q.to_string()))
    }
}

/// C(n, k), zero when k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 1), BigInt::from(3));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=60u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(15), 4), int(73440));
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(1), 5), int(120));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rational(" -1/8 ").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(6, -4).to_string(), "-3/2");
    }

    #[test]
    fn parses_decimals() {
        assert_eq!(parse_decimal("1e-18").unwrap(), pow_rational(&int(10), -18));
        assert_eq!(parse_decimal("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_decimal("-3.5E2").unwrap(), int(-350));
        assert_eq!(parse_decimal(".5").unwrap(), rat(1, 2));
        assert!(parse_decimal("1e").is_err());
        assert!(parse_decimal("abc").is_err());
    }

    #[test]
    fn square_detection() {
        assert_eq!(rational_sqrt(&int(4)), Some(int(2)));
        assert_eq!(rational_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(rational_sqrt(&rat(3, 2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}
