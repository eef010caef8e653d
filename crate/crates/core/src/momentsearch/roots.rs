//! Rational roots of integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use super::qpoly::QPoly;
use crate::exactnum::Rational;
use crate::rhcheck::{find_roots, BigFloat, Real};
use crate::unipoly::UniPoly;

/// Above this bound on |a_0| and |a_m| the divisor enumeration gives way to
/// a numeric search.
const ENUMERATION_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn by_enumeration(p: &QPoly, a0: u64, am: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for num in divisors(a0) {
        for den in divisors(am) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                if p.eval(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Numeric roots, rounded to the nearest fraction with denominator dividing
/// the leading coefficient, then checked exactly.
fn by_approximation(p: &QPoly) -> Vec<Rational> {
    let lead = p.coeffs().last().cloned().unwrap_or_else(BigInt::one);
    let lead_r = Rational::from_integer(lead.clone());
    let bits = 64 + 4 * p.coeffs().iter().map(|c| c.bits() as usize).max().unwrap_or(0);
    let Some(roots) = find_roots::<BigFloat>(&p.to_unipoly(), bits) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for z in roots {
        let scaled = z.re.clone() * BigFloat::from_rational(&lead_r, bits);
        let Ok(k) = BigInt::from_str_radix(&format!("{}", scaled.to_int().value()), 10) else {
            continue;
        };
        for cand in [k.clone() - 1, k.clone(), k + 1] {
            let r = Rational::new(cand, lead.clone());
            if p.eval(&r).is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}


/// Distinct rational roots of `p`, and `p` with every rational linear
/// factor (to full multiplicity) divided out.
pub fn rational_roots(p: &QPoly) -> (Vec<Rational>, QPoly) {
    if p.degree().unwrap_or(0) == 0 {
        return (Vec::new(), p.clone());
    }
    let mut rest = p.to_unipoly();
    let mut roots = Vec::new();
    // zero roots first, so the constant term is nonzero below
    let zeros = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        rest = UniPoly::new(rest.coeffs()[zeros..].to_vec());
    }
    let core = QPoly::from_unipoly(&rest);
    if core.degree().unwrap_or(0) > 0 {
        let a0 = core.coeffs()[0].abs();
        let am = core.coeffs().last().unwrap().abs();
        let found = match (a0.to_u64(), am.to_u64()) {
            (Some(x), Some(y)) if x <= ENUMERATION_LIMIT && y <= ENUMERATION_LIMIT => {
                by_enumeration(&core, x, y)
            }
            _ => by_approximation(&core),
        };
        for r in found {
            let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
            loop {
                let (quot, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
            }
            roots.push(r);
        }
    }
    roots.sort();
    (roots, QPoly::from_unipoly(&rest))
}
