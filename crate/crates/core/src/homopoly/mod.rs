//! Homogeneous bivariate polynomials `Σ A_i x^(n-i) y^i` with exact
//! coefficients.

mod json;
mod matrix;
mod text;

pub use json::{PolyJson, TermJson};
pub use matrix::Matrix2;
pub use text::parse_poly;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::unipoly::UniPoly;

/// Largest degree the front end accepts.
pub const MAX_DEGREE: usize = 512;

/// A form of degree `n`, stored sparsely by y-exponent. Stored coefficients
/// are never zero. The zero polynomial keeps a nominal degree.
#[derive(Clone, Debug, PartialEq)]
pub struct HomoPoly<S> {
    degree: usize,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> HomoPoly<S> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `x^n`.
    pub fn x_pow(degree: usize) -> Self {
        Self::monomial(degree, 0, S::one())
    }

    /// `c·x^(n-i) y^i`. Panics when `i > degree`.
    pub fn monomial(degree: usize, i: usize, c: S) -> Self {
        assert!(i <= degree, "y-exponent {i} exceeds degree {degree}");
        let mut p = Self::zero(degree);
        p.add_term(i, c);
        p
    }

    /// Builds from `(y-exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (usize, S)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (i, c) in terms {
            if i > degree {
                return Err(Error::IndexOutOfRange { index: i, degree });
            }
            p.add_term(i, c);
        }
        Ok(p)
    }

    /// Builds from a dense coefficient list `[A_0, …, A_n]`.
    pub fn from_dense(coeffs: Vec<S>) -> Self {
        let degree = coeffs.len().saturating_sub(1);
        let mut p = Self::zero(degree);
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(i, c);
        }
        p
    }

    fn add_term(&mut self, i: usize, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&i) {
            Some(old) => {
                let s = old.add_ref(&c);
                if !s.is_zero() {
                    self.coeffs.insert(i, s);
                }
            }
            None => {
                self.coeffs.insert(i, c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The coefficient A_i (zero when absent or out of range).
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(&i).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in ascending y-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_dense(&self) -> Vec<S> {
        (0..=self.degree).map(|i| self.coeff(i)).collect()
    }

    /// The least i >= 1 with A_i != 0; `None` for a pure power of x.
    pub fn min_weight(&self) -> Result<Option<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.keys().copied().find(|&i| i >= 1))
    }

    /// Every nonzero A_i has `c | i`.
    pub fn is_divisible_by(&self, c: usize) -> bool {
        c > 0 && self.coeffs.keys().all(|i| i % c == 0)
    }

    /// Invariance under `y ↦ ζ·y` for a primitive c-th root of unity ζ.
    /// The term `A_i x^(n-i) y^i` picks up ζ^i, so this is exactly
    /// divisibility by c.
    pub fn diag_action_root_of_unity(&self, c: usize) -> bool {
        self.is_divisible_by(c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HomoPoly<T> {
        let mut out = HomoPoly::zero(self.degree);
        for (i, c) in self.terms() {
            out.add_term(i, f(c));
        }
        out
    }

    /// Exact rational copy, if every coefficient is rational.
    pub fn to_rational(&self) -> Result<HomoPoly<Rational>> {
        let mut out = HomoPoly::zero(self.degree);
        for (i, c) in self.terms() {
            out.add_term(i, c.to_rational().ok_or(Error::NotRational)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// Sum of two forms of equal degree. A zero operand adopts the other's
    /// degree. Panics on mismatched nonzero degrees.
    pub fn add(&self, other: &Self) -> Self {
        let degree = self.common_degree(other);
        let mut out = self.clone();
        out.degree = degree;
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn common_degree(&self, other: &Self) -> usize {
        if self.is_zero() {
            other.degree
        } else if other.is_zero() {
            self.degree
        } else {
            assert_eq!(
                self.degree, other.degree,
                "adding forms of different degree"
            );
            self.degree
        }
    }

    /// Product; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i + j, a.mul_ref(b));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::x_pow(0);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Value at a point.
    pub fn eval(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (i, c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..self.degree - i {
                t = t.mul_ref(x);
            }
            for _ in 0..i {
                t = t.mul_ref(y);
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// `W(ax+by, cx+dy)` for `M = (a b / c d)`, expanded exactly.
    pub fn substitute(&self, m: &Matrix2<S>) -> Self {
        let n = self.degree;
        let first = linear_powers(&m.a, &m.b, n);
        let second = linear_powers(&m.c, &m.d, n);
        let mut dense = vec![S::zero(); n + 1];
        for (i, c) in self.terms() {
            let u = &first[n - i];
            let v = &second[i];
            for (j, uj) in u.iter().enumerate() {
                if uj.is_zero() {
                    continue;
                }
                let cu = c.mul_ref(uj);
                for (k, vk) in v.iter().enumerate() {
                    if !vk.is_zero() {
                        dense[j + k] = dense[j + k].add_ref(&cu.mul_ref(vk));
                    }
                }
            }
        }
        let mut out = Self::from_dense(dense);
        out.degree = n;
        out
    }

    /// The univariate `w(y) = W(1, y)`.
    pub fn dehomogenize(&self) -> UniPoly<S> {
        UniPoly::new(self.to_dense())
    }

    /// Homogenizes `w(y)` at degree `n`. Panics if `deg w > n`.
    pub fn homogenize(w: &UniPoly<S>, degree: usize) -> Self {
        assert!(w.degree().unwrap_or(0) <= degree);
        let mut p = Self::zero(degree);
        for (i, c) in w.coeffs().iter().enumerate() {
            p.add_term(i, c.clone());
        }
        p
    }
}

/// Dense coefficient lists of `(αx + βy)^k` for `k = 0..=n`.
fn linear_powers<S: Scalar>(alpha: &S, beta: &S, n: usize) -> Vec<Vec<S>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(vec![S::one()]);
    for k in 1..=n {
        let prev: &Vec<S> = &out[k - 1];
        let mut next = vec![S::zero(); k + 1];
        for (j, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[j] = next[j].add_ref(&c.mul_ref(alpha));
            next[j + 1] = next[j + 1].add_ref(&c.mul_ref(beta));
        }
        out.push(next);
    }
    out
}

/// Falling factorial m(m-1)…(m-k+1) as a scalar.
fn falling<S: Scalar>(m: usize, k: usize) -> S {
    (0..k).fold(S::one(), |acc, j| acc.mul_ref(&S::from_i64((m - j) as i64)))
}

/// Applies `p(∂/∂x, ∂/∂y)` to `w`. The result has degree `deg w − deg p`;
/// when `deg p > deg w` the result is the zero polynomial of degree 0.
pub fn diff_operator<S: Scalar>(p: &HomoPoly<S>, w: &HomoPoly<S>) -> HomoPoly<S> {
    let (m, n) = (p.degree, w.degree);
    if m > n {
        return HomoPoly::zero(0);
    }
    let mut out = HomoPoly::zero(n - m);
    for (j, pj) in p.terms() {
        // ∂x^(m-j) ∂y^j
        for (i, wi) in w.terms() {
            if i < j || n - i < m - j {
                continue;
            }
            let f = falling::<S>(n - i, m - j).mul_ref(&falling::<S>(i, j));
            out.add_term(i - j, pj.mul_ref(wi).mul_ref(&f));
        }
    }
    out
}

/// Exact divisibility `a | b` in the bivariate polynomial ring, returning
/// the quotient. Works on `a(1, y)` and `b(1, y)`: a degree-m form pairs
/// with a univariate polynomial of degree at most m, so `a | b` iff the
/// univariate quotient exists and fits in degree `deg b − deg a`.
pub fn poly_divides<S: Scalar>(a: &HomoPoly<S>, b: &HomoPoly<S>) -> Option<HomoPoly<S>> {
    if a.is_zero() {
        return None;
    }
    if b.is_zero() {
        return Some(HomoPoly::zero(b.degree.saturating_sub(a.degree)));
    }
    if a.degree > b.degree {
        return None;
    }
    let qdeg = b.degree - a.degree;
    let (quot, rem) = b.dehomogenize().div_rem(&a.dehomogenize());
    if !rem.is_zero() || quot.degree().unwrap_or(0) > qdeg {
        return None;
    }
    Some(HomoPoly::homogenize(&quot, qdeg))
}

impl<S: Scalar> HomoPoly<S> {
    /// Convenience for tests and constants: rational coefficients as
    /// `(i, numerator, denominator)`.
    pub fn from_rational_terms(degree: usize, terms: &[(usize, i64, i64)]) -> Self {
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|&(i, n, d)| (i, S::from_rational(&crate::exactnum::rat(n, d)))),
        )
        .expect("term index within degree")
    }

    /// True when the x^n coefficient is one.
    pub fn is_monic(&self) -> bool {
        self.coeff(0).is_one()
    }
}
