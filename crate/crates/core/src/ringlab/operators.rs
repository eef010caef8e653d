use serde::Serialize;

use crate::duality::{classify, VerdictKind};
use crate::error::{Error, Result};
use crate::exactnum::{int, pochhammer, Rational};
use crate::homopoly::{diff_operator, parse_poly, poly_divides, HomoPoly};

use super::PSI6;

/// `(1/(n−3)_4) · ∂/∂x (∂³/∂x³ + ∂³/∂y³) W`, of degree n − 4.
pub fn okuda_star(w: &HomoPoly<Rational>) -> Result<HomoPoly<Rational>> {
    let n = w.degree();
    if n < 4 {
        return Err(Error::DegreeTooSmall(n));
    }
    let p = HomoPoly::from_rational_terms(4, &[(0, 1, 1), (3, 1, 1)]);
    let norm = pochhammer(&int(n as i64 - 3), 4);
    Ok(diff_operator(&p, w).scale(&norm.recip()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Prop21Verdict {
    /// `{y(x³−y³)}^(d−4)` divides `p(D)W`.
    Divides,
    /// The same factor times ψ₆ divides `p(D)W`.
    DividesWithPsi6,
    Fails,
}

/// Divisibility of `p(D)W`, `p = y(y³ − 8x³)`, for a Type III formal weight
/// enumerator with d >= 6.
pub fn prop21_check(w: &HomoPoly<Rational>) -> Result<Prop21Verdict> {
    if !w.is_divisible_by(3) {
        return Err(Error::NotTypeIII("not divisible by 3".into()));
    }
    if classify(w, &int(3))?.kind != VerdictKind::AntiInvariant {
        return Err(Error::NotTypeIII("not anti-invariant under sigma_3".into()));
    }
    let d = w.min_weight()?;
    let d = match d {
        Some(d) if d >= 6 => d,
        other => return Err(Error::MinWeightTooSmall(other)),
    };
    let p = HomoPoly::from_rational_terms(4, &[(1, -8, 1), (4, 1, 1)]);
    let pdw = diff_operator(&p, w);
    // y(x³ − y³) = x³y − y⁴
    let base = HomoPoly::from_rational_terms(4, &[(1, 1, 1), (4, -1, 1)]);
    let a = base.pow((d - 4) as u32);
    let psi6: HomoPoly<Rational> = parse_poly(PSI6)?;
    Ok(if poly_divides(&a.mul(&psi6), &pdw).is_some() {
        Prop21Verdict::DividesWithPsi6
    } else if poly_divides(&a, &pdw).is_some() {
        Prop21Verdict::Divides
    } else {
        Prop21Verdict::Fails
    })
}
