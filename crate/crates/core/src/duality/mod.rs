//! The MacWilliams transform σ_q, invariance classification, dual distance,
//! and the conjugated transform σ_q τ σ_q.

mod omega;

pub use omega::Omega;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{check_q, pow_rational, Rational, Scalar};
use crate::homopoly::{HomoPoly, Matrix2};
use crate::linalg::nullspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    Invariant,
    AntiInvariant,
    Neither,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DualityVerdict<S> {
    pub kind: VerdictKind,
    pub transformed: HomoPoly<S>,
}

/// `q^(-n/2)`, exact in `S` when possible.
fn transform_scale<S: Scalar>(n: usize, q: &Rational) -> Result<S> {
    if n.is_multiple_of(2) {
        return Ok(S::from_rational(&pow_rational(q, -((n / 2) as i32))));
    }
    // q^(-n/2) = q^(-(n+1)/2) · √q
    let root = S::sqrt_of(q).ok_or_else(|| Error::SqrtUnavailable(q.to_string()))?;
    Ok(S::from_rational(&pow_rational(q, -(n.div_ceil(2) as i32))) * root)
}

/// `q^(-n/2) · W(x + (q-1)y, x - y)`.
pub fn macwilliams<S: Scalar>(w: &HomoPoly<S>, q: &Rational) -> Result<HomoPoly<S>> {
    check_q(q)?;
    let one = Rational::from_integer(1.into());
    let m = Matrix2::new(
        S::one(),
        S::from_rational(&(q - &one)),
        S::one(),
        -S::one(),
    );
    let scale = transform_scale::<S>(w.degree(), q)?;
    Ok(w.substitute(&m).scale(&scale))
}

pub fn classify<S: Scalar>(w: &HomoPoly<S>, q: &Rational) -> Result<DualityVerdict<S>> {
    let transformed = macwilliams(w, q)?;
    let kind = if transformed == *w {
        VerdictKind::Invariant
    } else if transformed == w.neg() {
        VerdictKind::AntiInvariant
    } else {
        VerdictKind::Neither
    };
    Ok(DualityVerdict { kind, transformed })
}

/// Minimum weight of the transform, the d⊥ of `W`. Errors when the
/// transform has no `x^n` term.
pub fn dual_distance<S: Scalar>(w: &HomoPoly<S>, q: &Rational) -> Result<Option<usize>> {
    let t = macwilliams(w, q)?;
    if t.coeff(0).is_zero() {
        return Err(Error::DegenerateTransform);
    }
    t.min_weight()
}

/// Multiplies the coefficient of `x^(n-i) y^i` by ω^i.
fn tau<S: Scalar>(w: &HomoPoly<Omega<S>>) -> HomoPoly<Omega<S>> {
    let terms = w.terms().map(|(i, c)| (i, c.clone() * Omega::omega_pow(i)));
    HomoPoly::from_terms(w.degree(), terms).expect("indices already in range")
}

/// `W` transformed by σ_q, then τ, then σ_q. Intermediate values carry a
/// primitive cube root of unity, so the result lives over `Omega<S>`; use
/// [`project_to_base`] to come back down.
pub fn conjugated_transform<S: Scalar>(
    w: &HomoPoly<S>,
    q: &Rational,
) -> Result<HomoPoly<Omega<S>>> {
    if !w.is_divisible_by(3) {
        return Err(Error::NotDivisible(3));
    }
    let lifted = w.map(|c| Omega::from_base(c.clone()));
    let first = macwilliams(&lifted, q)?;
    macwilliams(&tau(&first), q)
}

/// The base-field polynomial when no coefficient has an ω part.
pub fn project_to_base<S: Scalar>(w: &HomoPoly<Omega<S>>) -> Option<HomoPoly<S>> {
    let terms = w
        .terms()
        .map(|(i, c)| c.to_base().map(|b| (i, b)))
        .collect::<Option<Vec<_>>>()?;
    HomoPoly::from_terms(w.degree(), terms).ok()
}

pub fn is_conjugated_invariant<S: Scalar>(w: &HomoPoly<S>, q: &Rational) -> Result<bool> {
    let t = conjugated_transform(w, q)?;
    Ok(project_to_base(&t).is_some_and(|b| b == *w))
}

/// Echelon basis of `{W of degree n, divisible by c : σ_q(W) = sign·W}`.
pub fn invariant_subspace<S: Scalar>(
    n: usize,
    c: usize,
    q: &Rational,
    sign: i8,
) -> Result<Vec<HomoPoly<S>>> {
    check_q(q)?;
    if c == 0 {
        return Err(Error::NotDivisible(0));
    }
    let sign = if sign < 0 { -S::one() } else { S::one() };
    let support: Vec<usize> = (0..=n).step_by(c).collect();
    // Column j holds the coefficients of σ_q(x^(n-i) y^i) − sign·x^(n-i) y^i.
    let mut rows = vec![vec![S::zero(); support.len()]; n + 1];
    for (j, &i) in support.iter().enumerate() {
        let mono = HomoPoly::monomial(n, i, S::one());
        let col = macwilliams(&mono, q)?.sub(&mono.scale(&sign));
        for (k, a) in col.terms() {
            rows[k][j] = a.clone();
        }
    }
    let basis = nullspace(&rows, support.len());
    Ok(basis
        .into_iter()
        .map(|v| {
            HomoPoly::from_terms(n, support.iter().copied().zip(v))
                .expect("support indices are within degree")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, QScalar};
    use crate::homopoly::parse_poly;
    use proptest::prelude::*;

    type P = HomoPoly<Rational>;

    fn p(s: &str) -> P {
        parse_poly(s).unwrap()
    }

    fn eta6() -> P {
        p("x^6 + 5/2 x^3y^3 - 1/8 y^6")
    }

    fn eta12() -> P {
        p("x^12 - 11x^9y^3 - 11/8 x^3y^9 - 1/64 y^12")
    }

    fn h8() -> P {
        p("x^8 + 14x^4y^4 + y^8")
    }

    fn linear(a: i64, b: i64) -> P {
        P::from_dense(vec![int(a), int(b)])
    }

    #[test]
    fn hamming_transform_matches_direct_expansion() {
        // ((x+y)^8 + 14(x+y)^4(x-y)^4 + (x-y)^8) / 16, built by multiplication
        let s = linear(1, 1);
        let d = linear(1, -1);
        let oracle = s
            .pow(8)
            .add(&s.pow(4).mul(&d.pow(4)).scale(&int(14)))
            .add(&d.pow(8))
            .scale(&rat(1, 16));
        assert_eq!(macwilliams(&h8(), &int(2)).unwrap(), oracle);
        assert_eq!(oracle, h8());
    }

    #[test]
    fn known_characters() {
        let w12 = p("x^12 - 33x^8y^4 - 33x^4y^8 + y^12");
        assert_eq!(classify(&w12, &int(2)).unwrap().kind, VerdictKind::AntiInvariant);
        assert_eq!(classify(&eta6(), &rat(3, 2)).unwrap().kind, VerdictKind::Invariant);
        let psi6 = p("x^6 - 20x^3y^3 - 8y^6");
        assert_eq!(classify(&psi6, &int(3)).unwrap().kind, VerdictKind::AntiInvariant);
        assert_eq!(classify(&h8(), &int(2)).unwrap().kind, VerdictKind::Invariant);
    }

    #[test]
    fn neither_example() {
        let v = classify(&p("x^2 + 3y^2"), &int(2)).unwrap();
        assert_eq!(v.kind, VerdictKind::Neither);
        // ((x+y)^2 + 3(x-y)^2) / 2
        assert_eq!(v.transformed, p("2x^2 - 2xy + 2y^2"));
        assert_eq!(classify(&p("x^2 + y^2"), &int(2)).unwrap().kind, VerdictKind::Invariant);
    }

    #[test]
    fn odd_degree_needs_surds() {
        let phi3 = p("x^3 - 9xy^2");
        assert!(matches!(macwilliams(&phi3, &int(3)), Err(Error::SqrtUnavailable(_))));
        // √4 is rational, so the Type IV generator stays in Q.
        assert_eq!(classify(&phi3, &int(4)).unwrap().kind, VerdictKind::AntiInvariant);
        let w3: HomoPoly<QScalar> = parse_poly("x^3 + y^3").unwrap();
        let t = macwilliams(&w3, &int(3)).unwrap();
        assert!(t.terms().any(|(_, c)| c.to_rational().is_none()));
        assert_eq!(macwilliams(&t, &int(3)).unwrap(), w3);
    }

    #[test]
    fn dual_distances() {
        assert_eq!(dual_distance(&h8(), &int(2)).unwrap(), Some(4));
        assert_eq!(dual_distance(&P::x_pow(2), &int(2)).unwrap(), Some(1));
        // σ_2(x^2 - y^2)... has a vanishing x^2 term: (x+y)^2 - (x-y)^2 = 4xy
        assert_eq!(dual_distance(&p("x^2 - y^2"), &int(2)), Err(Error::DegenerateTransform));
    }

    #[test]
    fn invalid_q() {
        assert!(matches!(macwilliams(&h8(), &int(1)), Err(Error::InvalidQ(_))));
        assert!(matches!(macwilliams(&h8(), &int(0)), Err(Error::InvalidQ(_))));
    }

    #[test]
    fn conjugated_transform_fixes_generators() {
        assert!(is_conjugated_invariant(&eta12(), &rat(3, 2)).unwrap());
        assert!(is_conjugated_invariant(&eta6(), &rat(3, 2)).unwrap());
        assert!(matches!(
            conjugated_transform(&h8(), &int(2)),
            Err(Error::NotDivisible(3))
        ));
    }

    #[test]
    fn eta12_is_anti_invariant() {
        let v = classify(&eta12(), &rat(3, 2)).unwrap();
        assert_eq!(v.kind, VerdictKind::AntiInvariant);
    }

    #[test]
    fn invariant_subspace_dimensions() {
        let q = rat(3, 2);
        let b12 = invariant_subspace::<Rational>(12, 3, &q, 1).unwrap();
        assert_eq!(b12, vec![eta6().pow(2)]);
        for n in (8..=22).step_by(2) {
            let dim = invariant_subspace::<Rational>(n, 3, &q, 1).unwrap().len();
            let expected = usize::from(n == 12 || n == 18);
            assert_eq!(dim, expected, "degree {n}");
        }
        assert_eq!(invariant_subspace::<Rational>(24, 3, &q, 1).unwrap().len(), 2);
    }

    #[test]
    fn invariant_subspace_basis_is_fixed() {
        for (n, c, q, sign) in [(8, 4, int(2), 1i8), (12, 4, int(2), -1), (6, 3, int(3), -1)] {
            let basis = invariant_subspace::<Rational>(n, c, &q, sign).unwrap();
            assert!(!basis.is_empty());
            for b in basis {
                let t = macwilliams(&b, &q).unwrap();
                let expect = if sign > 0 { b.clone() } else { b.neg() };
                assert_eq!(t, expect);
                let lead = b.terms().next().unwrap().1.clone();
                assert_eq!(lead, int(1));
            }
        }
    }

    fn small_q() -> impl Strategy<Value = Rational> {
        (1i64..12, 1i64..6)
            .prop_filter("q != 1", |(a, b)| a != b)
            .prop_map(|(a, b)| rat(a, b))
    }

    proptest! {
        #[test]
        fn involution_even(v in proptest::collection::vec(-20i64..20, 1..6), q in small_q()) {
            let mut coeffs: Vec<Rational> = v.into_iter().map(int).collect();
            if coeffs.len() % 2 == 0 {
                coeffs.push(int(1));
            }
            let w = P::from_dense(coeffs);
            let t = macwilliams(&w, &q).unwrap();
            prop_assert_eq!(macwilliams(&t, &q).unwrap(), w);
        }

        #[test]
        fn involution_surd(v in proptest::collection::vec(-20i64..20, 2..6), q in small_q()) {
            let w = HomoPoly::<QScalar>::from_dense(v.into_iter().map(|a| QScalar::from(int(a))).collect());
            let t = macwilliams(&w, &q).unwrap();
            prop_assert_eq!(macwilliams(&t, &q).unwrap(), w);
        }

        #[test]
        fn invariant_implies_equal_distances(k in 0usize..3) {
            let w = [eta6(), eta6().pow(2), h8()][k].clone();
            let q = [rat(3, 2), rat(3, 2), int(2)][k].clone();
            let v = classify(&w, &q).unwrap();
            prop_assert_eq!(v.kind, VerdictKind::Invariant);
            prop_assert_eq!(dual_distance(&w, &q).unwrap(), w.min_weight().unwrap());
        }
    }
}
