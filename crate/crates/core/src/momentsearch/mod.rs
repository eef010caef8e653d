//! Binomial-moment systems with q as an unknown: building them, eliminating
//! the coefficients, and reading off the admissible q.

mod qpoly;
mod roots;

pub use qpoly::{QPoly, RatFn};
pub use roots::rational_roots;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, pow_rational, serde_text, Rational};
use crate::homopoly::HomoPoly;
use crate::linalg::{solve, Solution};

/// Rows ν = 0..N/2−1 of the moment identities, one column per `A_i`
/// (coefficient of `x^(N−ci) y^(ci)`).
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSystem {
    pub n: usize,
    pub c: usize,
    pub rows: Vec<Vec<QPoly>>,
}

impl MomentSystem {
    pub fn unknowns(&self) -> usize {
        self.n / self.c + 1
    }

    /// Every row evaluated at `q` against the coefficient vector `a`.
    pub fn residuals(&self, q: &Rational, a: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(a)
                    .fold(Rational::zero(), |acc, (p, ai)| acc + p.eval(q) * ai)
            })
            .collect()
    }
}

fn entry(n: usize, c: usize, i: usize, nu: usize) -> QPoly {
    let m = (n - c * i) as u64;
    let lo = binomial(m, nu as i64);
    let hi = binomial(m, (n - nu) as i64);
    QPoly::constant(lo).sub(&QPoly::monomial(hi, n / 2 - nu))
}

pub fn build(n: usize, c: usize) -> Result<MomentSystem> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if n < 2 || c < 2 {
        return Err(Error::MomentShape(format!(
            "need N >= 2 and c >= 2, got N = {n}, c = {c}"
        )));
    }
    let k = n / c;
    let rows = (0..n / 2)
        .map(|nu| (0..=k).map(|i| entry(n, c, i, nu)).collect())
        .collect();
    Ok(MomentSystem { n, c, rows })
}

/// Row ν of the full identity (any ν in 0..=N) evaluated at q, including
/// the rows `build` leaves out.
pub fn row_at(n: usize, c: usize, nu: usize, q: &Rational) -> Vec<Rational> {
    let shift = pow_rational(q, n as i32 / 2 - nu as i32);
    (0..=n / c)
        .map(|i| {
            let m = (n - c * i) as u64;
            Rational::from_integer(binomial(m, nu as i64))
                - &shift * Rational::from_integer(binomial(m, (n - nu) as i64))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QSolution {
    #[serde(serialize_with = "serde_text::rational")]
    pub q: Rational,
    /// Dimension of the solution space at this q; `None` if inconsistent.
    pub dimension: Option<usize>,
    /// `(A_0, …, A_k)` when the solution is unique.
    #[serde(serialize_with = "serde_text::option_rationals")]
    pub coefficients: Option<Vec<Rational>>,
}

/// Solution valid for every q off the listed pivot zeros.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Family {
    pub free_parameters: usize,
    /// `A_i` as functions of q when `free_parameters == 0`.
    pub coefficients: Vec<RatFn>,
    pub pivots: Vec<QPoly>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentSearch {
    pub n: usize,
    pub c: usize,
    pub equations: usize,
    pub unknowns: usize,
    /// Content-free consistency conditions left after elimination.
    pub consistency: Vec<QPoly>,
    pub gcd: Option<QPoly>,
    /// Distinct rational roots of the gcd, before filtering.
    #[serde(serialize_with = "serde_text::rationals")]
    pub rational_roots: Vec<Rational>,
    /// What remains of the gcd after removing its rational linear factors.
    pub unresolved_factor: Option<QPoly>,
    pub solutions: Vec<QSolution>,
    pub family: Option<Family>,
}

impl MomentSearch {
    /// `(q, A)` pairs with a unique coefficient vector.
    pub fn unique_solutions(&self) -> Vec<(Rational, Vec<Rational>)> {
        self.solutions
            .iter()
            .filter_map(|s| s.coefficients.clone().map(|a| (s.q.clone(), a)))
            .collect()
    }

    /// The gcd split as `rest · Π (b·q − a)^m` over its rational roots
    /// `a/b`, linear factors first.
    pub fn factorization(&self) -> Option<(Vec<(QPoly, usize)>, QPoly)> {
        let mut rest = self.gcd.clone()?;
        let mut linear = Vec::new();
        for r in &self.rational_roots {
            let f = QPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
            let mut m = 0;
            while !rest.is_zero() && rest.eval(r).is_zero() {
                rest = rest.div_exact(&f);
                m += 1;
            }
            linear.push((f, m));
        }
        Some((linear, rest))
    }
}

struct Eliminated {
    /// Augmented rows, unknowns `A_1..A_k` then the right-hand side.
    m: Vec<Vec<QPoly>>,
    /// (row, column) of each pivot, in order.
    pivots: Vec<(usize, usize)>,
    leftover_rows: Vec<usize>,
}

/// Fraction-free elimination with full pivoting: lowest-degree pivot, ties
/// by column then row.
fn bareiss(mut m: Vec<Vec<QPoly>>, ncols: usize) -> Eliminated {
    let nrows = m.len();
    let mut row_used = vec![false; nrows];
    let mut col_used = vec![false; ncols];
    let mut pivots = Vec::new();
    let mut prev = QPoly::constant(1);
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for c in (0..ncols).filter(|&c| !col_used[c]) {
            for r in (0..nrows).filter(|&r| !row_used[r]) {
                if let Some(d) = m[r][c].degree() {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, c, r));
                    }
                }
            }
        }
        let Some((_, pc, pr)) = best else { break };
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.push((pr, pc));
        let p = m[pr][pc].clone();
        for r in (0..nrows).filter(|&r| !row_used[r]) {
            let factor = m[r][pc].clone();
            for c in (0..=ncols).filter(|&c| c == ncols || !col_used[c]) {
                let v = p.mul(&m[r][c]).sub(&factor.mul(&m[pr][c]));
                m[r][c] = v.div_exact(&prev);
            }
            m[r][pc] = QPoly::zero();
        }
        prev = p;
    }
    let leftover_rows = (0..nrows).filter(|&r| !row_used[r]).collect();
    Eliminated {
        m,
        pivots,
        leftover_rows,
    }
}

/// Symbolic back-substitution through the pivots.
fn family(e: &Eliminated, ncols: usize) -> Family {
    let free = ncols - e.pivots.len();
    let mut values: Vec<Option<RatFn>> = vec![None; ncols];
    if free == 0 {
        for &(pr, pc) in e.pivots.iter().rev() {
            let mut acc = RatFn::from_poly(e.m[pr][ncols].clone());
            for (c, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    acc = acc.sub(&RatFn::from_poly(e.m[pr][c].clone()).mul(v));
                }
            }
            values[pc] = Some(acc.div(&RatFn::from_poly(e.m[pr][pc].clone())));
        }
    }
    let mut coefficients = vec![RatFn::from_poly(QPoly::constant(1))];
    if free == 0 {
        coefficients.extend(values.into_iter().map(|v| v.expect("pivot column")));
    }
    Family {
        free_parameters: free,
        coefficients,
        pivots: e.pivots.iter().map(|&(r, c)| e.m[r][c].clone()).collect(),
    }
}

/// Sets `A_0 = 1`, eliminates `A_1..A_k` over Z[q], and solves the
/// remaining conditions for rational q > 0, q != 1.
pub fn solve_for_q(s: &MomentSystem) -> MomentSearch {
    let k = s.unknowns() - 1;
    let aug: Vec<Vec<QPoly>> = s
        .rows
        .iter()
        .map(|row| {
            let mut r: Vec<QPoly> = row[1..].to_vec();
            r.push(QPoly::zero().sub(&row[0]));
            r
        })
        .collect();
    let e = bareiss(aug, k);
    let consistency: Vec<QPoly> = e
        .leftover_rows
        .iter()
        .map(|&r| e.m[r][k].primitive())
        .filter(|p| !p.is_zero())
        .collect();

    let mut out = MomentSearch {
        n: s.n,
        c: s.c,
        equations: s.rows.len(),
        unknowns: s.unknowns(),
        consistency: consistency.clone(),
        gcd: None,
        rational_roots: Vec::new(),
        unresolved_factor: None,
        solutions: Vec::new(),
        family: None,
    };
    if consistency.is_empty() {
        out.family = Some(family(&e, k));
        return out;
    }
    let g = consistency[1..]
        .iter()
        .fold(consistency[0].clone(), |acc, p| acc.gcd(p));
    let (roots, rest) = rational_roots(&g);
    out.gcd = Some(g);
    out.unresolved_factor = rest.degree().is_some_and(|d| d > 0).then_some(rest);
    for q in &roots {
        if *q <= Rational::zero() || q.is_one() {
            continue;
        }
        out.solutions.push(back_solve(s, q));
    }
    out.rational_roots = roots;
    out
}

fn back_solve(s: &MomentSystem, q: &Rational) -> QSolution {
    let k = s.unknowns() - 1;
    let a: Vec<Vec<Rational>> = s
        .rows
        .iter()
        .map(|row| row[1..].iter().map(|p| p.eval(q)).collect())
        .collect();
    let b: Vec<Rational> = s.rows.iter().map(|row| -row[0].eval(q)).collect();
    match solve(&a, &b, k) {
        Solution::Consistent {
            particular,
            nullspace,
            ..
        } => {
            let dim = nullspace.len();
            let coefficients = (dim == 0).then(|| {
                let mut v = vec![Rational::one()];
                v.extend(particular);
                v
            });
            QSolution {
                q: q.clone(),
                dimension: Some(dim),
                coefficients,
            }
        }
        Solution::Inconsistent { .. } => QSolution {
            q: q.clone(),
            dimension: None,
            coefficients: None,
        },
    }
}

/// Whether `W` satisfies every moment identity at `q`. The divisor is the
/// gcd of the exponents in the support.
pub fn check_membership(w: &HomoPoly<Rational>, q: &Rational) -> Result<bool> {
    let n = w.degree();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if !w.is_monic() {
        return Err(Error::MomentShape(format!(
            "need A_0 = 1, found {}",
            w.coeff(0)
        )));
    }
    let c = w
        .terms()
        .map(|(i, _)| i)
        .fold(0usize, |g, i| g.gcd(&i));
    let c = if c == 0 { n.max(2) } else { c };
    let a: Vec<Rational> = (0..=n / c).map(|i| w.coeff(c * i)).collect();
    if n < 2 {
        return Ok(true);
    }
    let system = if c >= 2 {
        build(n, c)?
    } else {
        // divisor 1: same identities, one column per exponent
        let rows = (0..n / 2)
            .map(|nu| (0..=n).map(|i| entry(n, 1, i, nu)).collect())
            .collect();
        MomentSystem { n, c: 1, rows }
    };
    Ok(system.residuals(q, &a).iter().all(|r| r.is_zero()))
}

/// Integer helper for tests and callers that hold plain coefficients.
pub fn qpoly(coeffs: &[i64]) -> QPoly {
    QPoly::new(coeffs.iter().map(|&a| BigInt::from(a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{classify, VerdictKind};
    use crate::exactnum::{int, rat};
    use crate::homopoly::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str) -> HomoPoly<Rational> {
        parse_poly(s).unwrap()
    }

    #[test]
    fn degree_six_rows() {
        let s = build(6, 3).unwrap();
        assert_eq!(s.rows.len(), 3);
        assert_eq!(s.rows[0], vec![qpoly(&[1, 0, 0, -1]), qpoly(&[1]), qpoly(&[1])]);
        assert_eq!(s.rows[1], vec![qpoly(&[6, 0, -6]), qpoly(&[3]), qpoly(&[])]);
        assert_eq!(s.rows[2], vec![qpoly(&[15, -15]), qpoly(&[3]), qpoly(&[])]);
        let r = s.residuals(&rat(3, 2), &[int(1), rat(5, 2), rat(-1, 8)]);
        assert!(r.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn degree_six_search_finds_three_halves() {
        let out = solve_for_q(&build(6, 3).unwrap());
        assert_eq!(out.gcd, Some(qpoly(&[3, -5, 2])));
        let mut roots = out.rational_roots.clone();
        roots.sort();
        assert_eq!(roots, vec![int(1), rat(3, 2)]);
        assert_eq!(
            out.unique_solutions(),
            vec![(rat(3, 2), vec![int(1), rat(5, 2), rat(-1, 8)])]
        );
        assert!(out.family.is_none());
        let (linear, rest) = out.factorization().unwrap();
        let product = linear
            .iter()
            .fold(rest.clone(), |acc, (f, m)| (0..*m).fold(acc, |a, _| a.mul(f)));
        assert_eq!(Some(product), out.gcd);
        assert_eq!(rest, qpoly(&[1]));
    }

    #[test]
    fn degree_two_family() {
        let s = build(2, 2).unwrap();
        assert_eq!(s.rows, vec![vec![qpoly(&[1, -1]), qpoly(&[1])]]);
        let out = solve_for_q(&s);
        assert!(out.consistency.is_empty());
        let fam = out.family.unwrap();
        assert_eq!(fam.free_parameters, 0);
        assert_eq!(fam.coefficients[1], RatFn::from_poly(qpoly(&[-1, 1])));
    }

    #[test]
    fn degree_four_cross_check() {
        let out = solve_for_q(&build(4, 3).unwrap());
        let found: Vec<Rational> = out.unique_solutions().into_iter().map(|(q, _)| q).collect();
        for q in [rat(3, 2), int(2), int(3), int(4), rat(5, 4), rat(1, 2)] {
            let basis = crate::duality::invariant_subspace::<Rational>(4, 3, &q, 1).unwrap();
            let monic = basis.iter().any(|b| !b.coeff(0).is_zero());
            assert_eq!(monic, found.contains(&q), "q = {q}");
        }
    }

    #[test]
    fn odd_degree_rejected() {
        assert_eq!(build(5, 3), Err(Error::OddDegree(5)));
    }

    #[test]
    fn mirror_rows() {
        for n in (2..=12).step_by(2) {
            for c in 2..=4 {
                for q in [rat(3, 2), int(2), rat(1, 3)] {
                    for nu in 0..n / 2 {
                        let a = row_at(n, c, nu, &q);
                        let b = row_at(n, c, n - nu, &q);
                        let f = pow_rational(&q, n as i32 / 2 - nu as i32);
                        for (x, y) in a.iter().zip(&b) {
                            assert_eq!(-x.clone(), y * &f);
                        }
                    }
                    assert!(row_at(n, c, n / 2, &q).iter().all(|x| x.is_zero()));
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let eta6 = p("x^6 + 5/2 x^3y^3 - 1/8 y^6");
        assert!(check_membership(&eta6, &rat(3, 2)).unwrap());
        let eta24 = p("x^24 + 253/4 x^18y^6 + 1265/32 x^15y^9 + 7659/256 x^12y^12 - 1265/256 x^9y^15 + 253/256 x^6y^18 + 1/4096 y^24");
        assert!(check_membership(&eta24, &rat(3, 2)).unwrap());
        assert!(check_membership(&p("x^8 + 14x^4y^4 + y^8"), &int(2)).unwrap());
        assert!(!check_membership(&p("x^8 + 15x^4y^4 + y^8"), &int(2)).unwrap());
        assert!(matches!(check_membership(&p("x^3 + y^3"), &int(2)), Err(Error::OddDegree(3))));
        assert!(matches!(check_membership(&p("2x^2 + y^2"), &int(2)), Err(Error::MomentShape(_))));
    }

    proptest! {
        #[test]
        fn moments_match_transform(
            half in 1usize..6,
            c in 1usize..4,
            raw in proptest::collection::vec((-6i64..6, 1i64..4), 12),
            qn in 1i64..8, qd in 1i64..4,
        ) {
            prop_assume!(qn != qd);
            let q = rat(qn, qd);
            let n = 2 * half;
            // mix a genuine invariant with a random perturbation half the time
            let mut terms = vec![(0usize, int(1))];
            for (j, (a, b)) in raw.iter().enumerate() {
                let i = c * (j + 1);
                if i <= n { terms.push((i, rat(*a, *b))); }
            }
            let w = HomoPoly::from_terms(n, terms).unwrap();
            let sym = w.add(&crate::duality::macwilliams(&w, &q).unwrap()).scale(&rat(1, 2));
            for cand in [w, sym] {
                let a0 = cand.coeff(0);
                if a0.is_zero() { continue; }
                let cand = cand.scale(&a0.recip());
                let inv = classify(&cand, &q).unwrap().kind == VerdictKind::Invariant;
                prop_assert_eq!(check_membership(&cand, &q).unwrap(), inv);
            }
        }

        #[test]
        fn returned_solutions_satisfy_rows(half in 1usize..8, c in 2usize..5) {
            let n = 2 * half;
            let s = build(n, c).unwrap();
            for (q, a) in solve_for_q(&s).unique_solutions() {
                prop_assert!(s.residuals(&q, &a).iter().all(|r| r.is_zero()));
            }
        }
    }
}
