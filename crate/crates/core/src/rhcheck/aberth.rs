//! Simultaneous root finding by Aberth–Ehrlich iteration.

use num_traits::Zero;

use super::real::{Cx, Real};
use crate::exactnum::Rational;
use crate::unipoly::UniPoly;

pub const ITERATION_CAP: usize = 200;
const POLISH_SWEEPS: usize = 2;

/// `(p(z), p'(z))` by Horner's rule.
fn eval_with_derivative<R: Real>(c: &[R], z: &Cx<R>, bits: usize) -> (Cx<R>, Cx<R>) {
    let mut p = Cx::new(R::zero(bits), R::zero(bits));
    let mut dp = p.clone();
    for a in c.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z);
        p.re = p.re + a.clone();
    }
    (p, dp)
}

/// Roots of a square-free polynomial with nonzero constant term, or `None`
/// when the iteration does not settle within the cap or the residuals stay
/// large.
fn aberth<R: Real>(f: &UniPoly<Rational>, bits: usize) -> Option<Vec<Cx<R>>> {
    let e = f.degree()?;
    let coeffs = f.coeffs();
    if e == 1 {
        let root = -(&coeffs[0] / &coeffs[1]);
        return Some(vec![Cx::new(R::from_rational(&root, bits), R::zero(bits))]);
    }
    let c: Vec<R> = coeffs.iter().map(|a| R::from_rational(a, bits)).collect();
    let abs_c: Vec<R> = c.iter().map(|a| a.abs()).collect();

    let ratio = num_traits::ToPrimitive::to_f64(&(&coeffs[0] / &coeffs[e]))
        .unwrap_or(1.0)
        .abs();
    let radius = ratio.powf(1.0 / e as f64);
    let mut z: Vec<Cx<R>> = (0..e)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / e as f64 + 0.7;
            Cx::new(
                R::from_f64(radius * angle.cos(), bits),
                R::from_f64(radius * angle.sin(), bits),
            )
        })
        .collect();

    // Steps below 2^(-bits/2) are within quadratic reach of the noise floor,
    // which ill-conditioned roots never get under a full-precision threshold.
    let eps = R::pow2_neg(bits / 2, bits);
    let eps_sq = eps.clone() * eps;
    let one = Cx::new(R::one(bits), R::zero(bits));
    let mut converged = false;
    let mut polish = POLISH_SWEEPS;
    for _ in 0..ITERATION_CAP {
        let mut settled = true;
        for k in 0..e {
            let (p, dp) = eval_with_derivative(&c, &z[k], bits);
            if p.norm_sqr() == R::zero(bits) {
                continue;
            }
            let ratio = p.div(&dp);
            let mut sum = Cx::new(R::zero(bits), R::zero(bits));
            for j in 0..e {
                if j != k {
                    sum = sum.add(&one.div(&z[k].sub(&z[j])));
                }
            }
            let w = ratio.div(&one.sub(&ratio.mul(&sum)));
            z[k] = z[k].sub(&w);
            if w.norm_sqr() > eps_sq.clone() * z[k].norm_sqr() {
                settled = false;
            }
        }
        if settled || converged {
            converged = true;
            if polish == 0 {
                break;
            }
            polish -= 1;
        }
    }
    if !converged {
        return None;
    }

    // |p(z)| <= 2^(-bits/2) · Σ |c_i| |z|^i
    let tol = R::pow2_neg(bits / 2, bits);
    for root in &z {
        let (p, _) = eval_with_derivative(&c, root, bits);
        let r = root.abs();
        let mut scale = R::zero(bits);
        for a in abs_c.iter().rev() {
            scale = scale * r.clone() + a.clone();
        }
        let bound = tol.clone() * scale;
        if p.norm_sqr() > bound.clone() * bound {
            return None;
        }
    }
    Some(z)
}

/// All complex roots of `p` with multiplicity. `None` signals that the
/// iteration failed to converge at this precision.
pub fn find_roots<R: Real>(p: &UniPoly<Rational>, precision_bits: usize) -> Option<Vec<Cx<R>>> {
    let bits = R::effective_bits(precision_bits);
    let coeffs = p.coeffs();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = UniPoly::new(coeffs[zeros..].to_vec());
    let mut roots: Vec<Cx<R>> = (0..zeros)
        .map(|_| Cx::new(R::zero(bits), R::zero(bits)))
        .collect();
    for (factor, mult) in rest.square_free_decomposition() {
        let found = aberth::<R>(&factor, bits)?;
        for r in found {
            for _ in 0..mult {
                roots.push(r.clone());
            }
        }
    }
    Some(roots)
}
