use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{RingName, RingSpec};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::homopoly::HomoPoly;
use crate::linalg::{solve, Solution};
use crate::rhcheck::{rh_verdict, RHVerdict};
use crate::zeta::zeta_polynomial;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub w: HomoPoly<Rational>,
    pub d: usize,
    pub unique: bool,
    pub bound: i64,
    pub meets_bound: bool,
    /// The bound is only conjectured for this ring.
    pub conjectural: bool,
}

/// Monic combination of `basis` with `A_i = 0` for `1 <= i < d`.
fn monic_with_gap(basis: &[HomoPoly<Rational>], d: usize) -> Option<(Vec<Rational>, usize)> {
    let k = basis.len();
    let mut rows = vec![basis.iter().map(|b| b.coeff(0)).collect::<Vec<_>>()];
    let mut rhs = vec![Rational::one()];
    for i in 1..d {
        let row: Vec<Rational> = basis.iter().map(|b| b.coeff(i)).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    match solve(&rows, &rhs, k) {
        Solution::Consistent {
            particular,
            nullspace,
            ..
        } => Some((particular, nullspace.len())),
        Solution::Inconsistent { .. } => None,
    }
}

/// The element of the graded piece of degree n (character `sign`) with
/// the largest minimum weight, found by raising d until the linear
/// conditions become infeasible.
pub fn extremal(ring: &RingSpec, n: usize, sign: i8) -> Result<ExtremalResult> {
    let basis = ring.graded_basis(n, sign);
    if basis.is_empty() {
        return Err(Error::InadmissibleDegree {
            ring: ring.name.to_string(),
            degree: n,
        });
    }
    let Some(mut best) = monic_with_gap(&basis, 1) else {
        return Err(Error::DegeneratePiece(n));
    };
    let mut d = 1;
    while d <= n {
        match monic_with_gap(&basis, d + 1) {
            Some(s) => {
                best = s;
                d += 1;
            }
            None => break,
        }
    }
    let (lambda, free) = best;
    let w = basis
        .iter()
        .zip(&lambda)
        .fold(HomoPoly::zero(n), |acc, (b, l)| acc.add(&b.scale(l)));
    let d = w.min_weight()?.ok_or(Error::DegeneratePiece(n))?;
    let bound = ring.ms_bound(n)?;
    Ok(ExtremalResult {
        w,
        d,
        unique: free == 0,
        bound,
        meets_bound: d as i64 == bound,
        conjectural: ring.name.conjectural(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub d: usize,
    pub bound: i64,
    pub within_bound: bool,
    pub meets_bound: bool,
    pub unique: bool,
    pub conjectural: bool,
}

/// Extremal d against the bound for every admissible degree up to
/// `n_max`, computed in parallel and listed by degree.
pub fn bound_survey(ring: &RingSpec, n_max: usize) -> Result<Vec<SurveyRow>> {
    let degrees: Vec<usize> = (1..=n_max).filter(|&n| ring.has_target_piece(n)).collect();
    let mut rows = degrees
        .par_iter()
        .map(|&n| {
            let e = extremal(ring, n, ring.target_sign)?;
            Ok(SurveyRow {
                n,
                d: e.d,
                bound: e.bound,
                within_bound: e.d as i64 <= e.bound,
                meets_bound: e.meets_bound,
                unique: e.unique,
                conjectural: e.conjectural,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RhSweepRow {
    pub n: usize,
    pub d: usize,
    pub zeta_degree: usize,
    pub verdict: RHVerdict,
    pub max_radial_deviation: Option<f64>,
}

/// RH verdicts for the extremal elements of each admissible degree up to
/// `n_max`. Reports; does not assert.
pub fn rh_sweep(
    ring: &RingSpec,
    n_max: usize,
    tolerance: &Rational,
    precision_bits: usize,
) -> Result<Vec<RhSweepRow>> {
    let degrees: Vec<usize> = (1..=n_max).filter(|&n| ring.has_target_piece(n)).collect();
    let mut rows = degrees
        .par_iter()
        .map(|&n| {
            let e = extremal(ring, n, ring.target_sign)?;
            let z = zeta_polynomial(&e.w, &ring.q)?;
            let report = rh_verdict(&z, tolerance, precision_bits)?;
            Ok(RhSweepRow {
                n,
                d: e.d,
                zeta_degree: z.degree(),
                verdict: report.verdict,
                max_radial_deviation: report.max_radial_deviation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

impl RingName {
    /// Rings whose bounds are proven.
    pub fn proven() -> [RingName; 4] {
        [
            RingName::TypeI,
            RingName::TypeII,
            RingName::TypeIII,
            RingName::TypeIV,
        ]
    }
}
