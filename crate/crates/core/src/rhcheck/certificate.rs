//! Exact unit-circle test over Q(√q) via Schur–Cohn reduction and Cohn's
//! criterion on derivatives.

use std::cmp::Ordering;

use serde::Serialize;

use crate::exactnum::{pow_rational, QContext, QScalar, Scalar};
use crate::unipoly::UniPoly;
use crate::zeta::{self_inversive_check, SelfInversive, ZetaPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    Certified,
    Refuted,
    Unsupported,
}

type QPoly = UniPoly<QScalar>;

fn degree(p: &QPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// `t^m · p(1/t)` with `m = deg p`; real coefficients, so no conjugation.
fn star(p: &QPoly) -> QPoly {
    p.reversed()
}

/// Every root strictly inside the unit disk.
fn strictly_inside(g: &QPoly) -> bool {
    let mut g = g.monic();
    while let Some(m) = g.degree().filter(|&m| m > 0) {
        let a0 = g.coeff(0);
        let gap = QScalar::from_i64(1) - a0.clone() * a0.clone();
        if gap.signum() != Ordering::Greater {
            return false;
        }
        // (g − a0·g*)/t has the same number of roots inside, one fewer in total.
        let reduced = g.sub(&star_full(&g, m).scale(&a0));
        g = QPoly::new(reduced.coeffs().iter().skip(1).cloned().collect()).monic();
    }
    true
}

/// Reversal against a fixed degree `m`, keeping a root at infinity when the
/// constant term vanishes.
fn star_full(g: &QPoly, m: usize) -> QPoly {
    QPoly::new((0..=m).map(|k| g.coeff(m - k)).collect())
}

/// Every root in the closed unit disk.
fn in_closed_disk(g: &QPoly) -> bool {
    if degree(g) == 0 {
        return true;
    }
    let h = g.gcd(&star(g));
    let inner = g.div_rem(&h).0;
    strictly_inside(&inner) && (degree(&h) == 0 || on_circle(&h))
}

/// For a self-inversive `f`: every root on the unit circle iff every root
/// of `f'` lies in the closed unit disk.
fn on_circle(f: &QPoly) -> bool {
    degree(f) == 0 || in_closed_disk(&f.derivative())
}

/// `f(U) = P(U/√q)`, which moves the circle |T| = 1/√q to |U| = 1.
fn rescaled(p: &ZetaPoly, ctx: &QContext) -> QPoly {
    let root = QScalar::sqrt_q(ctx);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let half = (k as i32 + 1) / 2;
            let mut s = QScalar::from(c * pow_rational(&p.q, -half));
            if k % 2 == 1 {
                s = s * root.clone();
            }
            s
        })
        .collect();
    QPoly::new(coeffs)
}

/// Decides exactly whether every zero of a self-inversive `P` lies on
/// |T| = 1/√q. Unsupported for constant or non-self-inversive input.
pub fn exact_circle_certificate(p: &ZetaPoly) -> Certificate {
    if p.degree() == 0 || p.poly.is_zero() {
        return Certificate::Unsupported;
    }
    match self_inversive_check(p) {
        Ok(SelfInversive::Plus | SelfInversive::Minus) => {}
        _ => return Certificate::Unsupported,
    }
    let Ok(ctx) = QContext::new(p.q.clone()) else {
        return Certificate::Unsupported;
    };
    if on_circle(&rescaled(p, &ctx)) {
        Certificate::Certified
    } else {
        Certificate::Refuted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn zp(c: &[Rational], q: Rational) -> ZetaPoly {
        ZetaPoly::from_coeffs(c.to_vec(), q)
    }

    fn plain(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&a| QScalar::from_i64(a)).collect())
    }

    #[test]
    fn schur_cohn_basics() {
        assert!(strictly_inside(&plain(&[1, 3])));
        assert!(!strictly_inside(&plain(&[3, 1])));
        assert!(!strictly_inside(&plain(&[1, 1])));
        assert!(strictly_inside(&plain(&[1, 0, 4])));
        assert!(in_closed_disk(&plain(&[-1, 0, 1])));
        assert!(in_closed_disk(&plain(&[-1, 1]).mul(&plain(&[1, 2]))));
        assert!(!in_closed_disk(&plain(&[-3, 1])));
    }

    #[test]
    fn eta6_zeta_certified() {
        let p6 = zp(&[rat(2, 8), rat(3, 8), rat(3, 8)], rat(3, 2));
        assert_eq!(exact_circle_certificate(&p6), Certificate::Certified);
    }

    #[test]
    fn off_circle_refuted() {
        // (T - 1)(T - 1/2) at q = 2 is self-inversive but has no root on the circle.
        let p = zp(&[rat(1, 2), rat(-3, 2), int(1)], int(2));
        assert_eq!(exact_circle_certificate(&p), Certificate::Refuted);
    }

    #[test]
    fn gates() {
        assert_eq!(exact_circle_certificate(&zp(&[int(-1), int(1)], int(2))), Certificate::Unsupported);
        assert_eq!(exact_circle_certificate(&zp(&[int(5)], int(2))), Certificate::Unsupported);
    }

    #[test]
    fn odd_degree_and_repeated_roots() {
        // (T^2 - 1/2)^2 at q = 2: double roots on the circle.
        let b = UniPoly::new(vec![rat(-1, 2), int(0), int(1)]);
        let p = ZetaPoly { poly: b.mul(&b), ..zp(&[int(1)], int(2)) };
        assert_eq!(exact_circle_certificate(&p), Certificate::Certified);
        let m = zp(&[int(-2), int(0), int(3)], rat(3, 2));
        assert_eq!(exact_circle_certificate(&m), Certificate::Certified);
        // odd degree: T + 1/2 at q = 4 has its root on |T| = 1/2
        let m = zp(&[rat(1, 2), int(1)], int(4));
        assert_eq!(exact_circle_certificate(&m), Certificate::Certified);
    }
}
