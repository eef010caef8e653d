//! Zeta polynomials of formal weight enumerators and the relations among
//! them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::duality::dual_distance;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, check_q, pow_rational, QContext, QScalar, Rational};
use crate::homopoly::HomoPoly;
use crate::linalg::{solve, Solution};
use crate::unipoly::UniPoly;

/// The zeta polynomial `P(T)` of a form `W`, together with where it came
/// from. Coefficients are not normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPoly {
    pub poly: UniPoly<Rational>,
    pub q: Rational,
    pub n: usize,
    pub d: usize,
    pub d_perp: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SelfInversive {
    Plus,
    Minus,
    No,
}

impl ZetaPoly {
    /// Wraps a bare polynomial, e.g. one typed at the command line.
    /// The provenance fields are zero.
    pub fn from_coeffs(coeffs: Vec<Rational>, q: Rational) -> Self {
        Self {
            poly: UniPoly::new(coeffs),
            q,
            n: 0,
            d: 0,
            d_perp: 0,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

/// `(q^(k+1) - 1)/(q - 1)` for k = 0..=m, the series of `1/((1-T)(1-qT))`.
fn s_series(q: &Rational, m: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m + 1);
    let mut acc = Rational::zero();
    let mut qk = Rational::one();
    for _ in 0..=m {
        acc += &qk;
        out.push(acc.clone());
        qk *= q;
    }
    out
}

/// Dense y-exponent vector of `C(n,c) y^(n-c) (x-y)^c`.
fn g_form(n: usize, c: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n + 1];
    let bn = binomial(n as u64, c as i64);
    for j in 0..=c {
        let mut b = bn.clone() * binomial(c as u64, j as i64);
        if j % 2 == 1 {
            b = -b;
        }
        v[n - c + j] = Rational::from_integer(b);
    }
    v
}

fn min_distance(w: &HomoPoly<Rational>, q: &Rational) -> Result<(usize, usize)> {
    let d = w.min_weight()?;
    let lifted = w.map(|c| QScalar::from(c.clone()));
    let d_perp = dual_distance(&lifted, q)?;
    match (d, d_perp) {
        (Some(d), Some(dp)) if d >= 2 && dp >= 2 => Ok((d, dp)),
        (d, d_perp) => Err(Error::DistanceTooSmall { d, d_perp }),
    }
}

/// The unique `P(T)` of degree at most `n - d` attached to `W` at `q`.
pub fn zeta_polynomial(w: &HomoPoly<Rational>, q: &Rational) -> Result<ZetaPoly> {
    check_q(q)?;
    if !w.is_monic() {
        return Err(Error::NotMonic(w.coeff(0).to_string()));
    }
    let n = w.degree();
    let (d, d_perp) = min_distance(w, q)?;
    let m = n - d;
    let s = s_series(q, m);
    let g: Vec<Vec<Rational>> = (0..=m).map(|c| g_form(n, c)).collect();

    // Column a: T^(n-d) coefficient of T^a · S(T) · (y + (x-y)T)^n.
    let mut rows = vec![vec![Rational::zero(); m + 1]; n + 1];
    for a in 0..=m {
        for c in 0..=(m - a) {
            let sk = &s[m - a - c];
            for (i, gi) in g[c].iter().enumerate() {
                if !gi.is_zero() {
                    rows[i][a] += sk * gi;
                }
            }
        }
    }
    let qm1 = q - Rational::one();
    let rhs: Vec<Rational> = (0..=n)
        .map(|i| {
            let a = if i == 0 { Rational::zero() } else { w.coeff(i) };
            a / &qm1
        })
        .collect();
    let coeffs = match solve(&rows, &rhs, m + 1) {
        Solution::Consistent {
            particular,
            nullspace,
            ..
        } if nullspace.is_empty() => particular,
        Solution::Consistent { rank, .. } | Solution::Inconsistent { rank } => {
            return Err(Error::InconsistentZeta {
                rank,
                unknowns: m + 1,
            })
        }
    };
    let z = ZetaPoly {
        poly: UniPoly::new(coeffs),
        q: q.clone(),
        n,
        d,
        d_perp,
    };
    if !verify_zeta(w, q, &z) {
        return Err(Error::InconsistentZeta {
            rank: m + 1,
            unknowns: m + 1,
        });
    }
    Ok(z)
}

/// Truncated product of two power series.
fn series_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Re-expands `P(T)/((1-T)(1-qT)) · (y(1-T) + xT)^n` monomial by monomial
/// and checks that its `T^(n-d)` slice is `(W - x^n)/(q-1)`.
pub fn verify_zeta(w: &HomoPoly<Rational>, q: &Rational, p: &ZetaPoly) -> bool {
    let n = w.degree();
    let Ok(Some(d)) = w.min_weight() else {
        return false;
    };
    if p.degree() > n - d || q.is_one() {
        return false;
    }
    let m = n - d;
    let one = Rational::one();
    let geometric = |r: &Rational| -> Vec<Rational> {
        let mut v = Vec::with_capacity(m + 1);
        let mut t = one.clone();
        for _ in 0..=m {
            v.push(t.clone());
            t *= r;
        }
        v
    };
    let z = series_mul(
        &series_mul(p.coeffs(), &geometric(&one), m),
        &geometric(q),
        m,
    );
    let qm1 = q - &one;
    // x^j y^(n-j) picks up C(n,j) T^j (1-T)^(n-j).
    (0..=n).all(|j| {
        let mut lhs = Rational::zero();
        if j <= m {
            let cnj = Rational::from_integer(binomial(n as u64, j as i64));
            for k in 0..=(m - j).min(n - j) {
                let mut b = Rational::from_integer(binomial((n - j) as u64, k as i64));
                if k % 2 == 1 {
                    b = -b;
                }
                lhs += &cnj * b * &z[m - j - k];
            }
        }
        let i = n - j;
        let target = if i == 0 { Rational::zero() } else { w.coeff(i) } / &qm1;
        lhs == target
    })
}

/// `Pstar == (3T^2 - 3T + 1)·P`, exactly.
pub fn product_relation(p: &ZetaPoly, pstar: &ZetaPoly) -> bool {
    if p.q != pstar.q {
        return false;
    }
    let factor = UniPoly::new(vec![Rational::one(), Rational::from_integer((-3).into()), Rational::from_integer(3.into())]);
    factor.mul(&p.poly) == pstar.poly
}

/// Whether `q^(e/2) T^e P(1/(qT)) = ±P(T)`, decided in Q(√q).
pub fn self_inversive_check(p: &ZetaPoly) -> Result<SelfInversive> {
    check_q(&p.q)?;
    let e = p.degree();
    let ctx = QContext::new(p.q.clone())?;
    let root = QScalar::sqrt_q(&ctx);
    let (mut plus, mut minus) = (true, true);
    for j in 0..=e {
        // coefficient of T^j on the left: p_(e-j) · q^(j - e/2)
        let shift = 2 * j as i64 - e as i64;
        let mut lhs = QScalar::from(p.poly.coeff(e - j) * pow_rational(&p.q, shift.div_euclid(2) as i32));
        if shift % 2 != 0 {
            lhs = lhs * root.clone();
        }
        let pj = QScalar::from(p.poly.coeff(j));
        plus &= lhs == pj;
        minus &= lhs == -pj;
    }
    Ok(if plus {
        SelfInversive::Plus
    } else if minus {
        SelfInversive::Minus
    } else {
        SelfInversive::No
    })
}

/// Integer polynomial text in descending powers, e.g. `3T^2+3T+2`.
fn integer_poly_text(c: &[BigInt]) -> String {
    let mut s = String::new();
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let mag = a.abs();
        if a.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if k == 0 || !mag.is_one() {
            s.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => s.push('T'),
            _ => s.push_str(&format!("T^{k}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for ZetaPoly {
    /// Prints `(numerator)/L` with `L` the lcm of the denominators, e.g.
    /// `(3T^2+3T+2)/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let text = integer_poly_text(&num);
        if l.is_one() {
            write!(f, "{text}")
        } else {
            write!(f, "({text})/{l}")
        }
    }
}
