use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{check_q, parse_rational, rational_sqrt, Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Debug)]
struct ContextInner {
    q: Rational,
    root: Option<Rational>,
}

/// A fixed positive rational q (q != 1) together with its rational square
/// root when q is a perfect square.
#[derive(Clone, Debug)]
pub struct QContext(Arc<ContextInner>);

impl QContext {
    pub fn new(q: Rational) -> Result<Self> {
        check_q(&q)?;
        let root = rational_sqrt(&q);
        Ok(QContext(Arc::new(ContextInner { q, root })))
    }

    pub fn q(&self) -> &Rational {
        &self.0.q
    }

    /// `Some(r)` with r² = q when q is the square of a rational.
    pub fn rational_root(&self) -> Option<&Rational> {
        self.0.root.as_ref()
    }
}

impl PartialEq for QContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.q == other.0.q
    }
}

impl Eq for QContext {}

/// Exact element `rat + rad·√q` of Q(√q).
///
/// Values built from a plain rational carry no context and combine with any
/// context; two values carrying different contexts refuse to combine. When q
/// is a rational square the radical part is folded into the rational part.
#[derive(Clone, Debug)]
pub struct QScalar {
    rat: Rational,
    rad: Rational,
    ctx: Option<QContext>,
}

impl QScalar {
    pub fn new(rat: Rational, rad: Rational, ctx: &QContext) -> Self {
        Self {
            rat,
            rad,
            ctx: Some(ctx.clone()),
        }
        .normalized()
    }

    /// A rational value with no q context.
    pub fn rational(r: Rational) -> Self {
        Self {
            rat: r,
            rad: Rational::zero(),
            ctx: None,
        }
    }

    /// √q itself.
    pub fn sqrt_q(ctx: &QContext) -> Self {
        Self::new(Rational::zero(), Rational::one(), ctx)
    }

    pub fn rat_part(&self) -> &Rational {
        &self.rat
    }

    pub fn rad_part(&self) -> &Rational {
        &self.rad
    }

    pub fn context(&self) -> Option<&QContext> {
        self.ctx.as_ref()
    }

    /// Folds the radical part when √q is rational. Idempotent.
    pub fn normalized(mut self) -> Self {
        if let Some(root) = self.ctx.as_ref().and_then(|c| c.rational_root()) {
            if !self.rad.is_zero() {
                let folded = &self.rad * root;
                self.rat += folded;
                self.rad = Rational::zero();
            }
        }
        self
    }

    fn merge_ctx(&self, other: &Self) -> Result<Option<QContext>> {
        match (&self.ctx, &other.ctx) {
            (None, c) | (c, None) => Ok(c.clone()),
            (Some(a), Some(b)) if a == b => Ok(Some(a.clone())),
            (Some(a), Some(b)) => Err(Error::ContextMismatch {
                left: a.q().to_string(),
                right: b.q().to_string(),
            }),
        }
    }

    fn q_or_zero(ctx: &Option<QContext>) -> Rational {
        ctx.as_ref().map(|c| c.q().clone()).unwrap_or_default()
    }

    fn build(rat: Rational, rad: Rational, ctx: Option<QContext>) -> Self {
        Self { rat, rad, ctx }.normalized()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let ctx = self.merge_ctx(other)?;
        Ok(Self::build(&self.rat + &other.rat, &self.rad + &other.rad, ctx))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let ctx = self.merge_ctx(other)?;
        Ok(Self::build(&self.rat - &other.rat, &self.rad - &other.rad, ctx))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let ctx = self.merge_ctx(other)?;
        let q = Self::q_or_zero(&ctx);
        let rat = &self.rat * &other.rat + &self.rad * &other.rad * q;
        let rad = &self.rat * &other.rad + &self.rad * &other.rat;
        Ok(Self::build(rat, rad, ctx))
    }

    /// Field norm `rat² − rad²·q`, nonzero for nonzero values.
    pub fn norm(&self) -> Rational {
        let q = Self::q_or_zero(&self.ctx);
        &self.rat * &self.rat - &self.rad * &self.rad * q
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rat: self.rat.clone(),
            rad: -self.rad.clone(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let ctx = self.merge_ctx(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        Ok(Self::build(num.rat / &n, num.rad / &n, ctx))
    }

    /// Exact sign of the real number `rat + rad·√q`.
    pub fn signum(&self) -> Ordering {
        let a = self.rat.cmp(&Rational::zero());
        let b = self.rad.cmp(&Rational::zero());
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, y) => {
                let q = Self::q_or_zero(&self.ctx);
                let lhs = &self.rat * &self.rat;
                let rhs = &self.rad * &self.rad * q;
                if lhs > rhs {
                    x
                } else {
                    y
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.rad.is_zero() {
            return r;
        }
        let q = Self::q_or_zero(&self.ctx).to_f64().unwrap_or(f64::NAN);
        r + self.rad.to_f64().unwrap_or(f64::NAN) * q.sqrt()
    }
}

/// The four field operations, for [`qscalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic with context checking; the fallible form of the operators.
pub fn qscalar_arith(x: &QScalar, y: &QScalar, op: ArithOp) -> Result<QScalar> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

impl PartialEq for QScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.rat != other.rat || self.rad != other.rad {
            return false;
        }
        self.rad.is_zero() || self.ctx == other.ctx
    }
}

impl Eq for QScalar {}

impl From<Rational> for QScalar {
    fn from(r: Rational) -> Self {
        QScalar::rational(r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for QScalar {
            type Output = QScalar;
            /// Panics on mismatched contexts (and division by zero); use the
            /// `checked_*` methods to handle those as errors.
            fn $method(self, rhs: QScalar) -> QScalar {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            rat: -self.rat,
            rad: -self.rad,
            ctx: self.ctx,
        }
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::rational(Rational::one())
    }
}

impl Scalar for QScalar {
    fn from_rational(r: &Rational) -> Self {
        QScalar::rational(r.clone())
    }

    fn sqrt_of(q: &Rational) -> Option<Self> {
        QContext::new(q.clone()).ok().map(|c| QScalar::sqrt_q(&c))
    }

    fn to_rational(&self) -> Option<Rational> {
        self.rad.is_zero().then(|| self.rat.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn is_negative_display(&self) -> bool {
        self.rad.is_zero() && self.rat.is_negative()
    }

    fn is_compound(&self) -> bool {
        !self.rad.is_zero()
    }
}

impl fmt::Display for QScalar {
    /// `a` when rational, otherwise `a + b*sqrt(q)` (or `a - |b|*sqrt(q)`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let q = Self::q_or_zero(&self.ctx);
        let sign = if self.rad.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.rat, sign, self.rad.abs(), q)
    }
}

impl FromStr for QScalar {
    type Err = Error;

    /// Accepts a rational, or `a + b*sqrt(q)` / `a - b*sqrt(q)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::ParseRational(s.to_string());
        let Some(open) = t.find("*sqrt(") else {
            return parse_rational(&t).map(QScalar::rational);
        };
        let inner = t[open + 6..].strip_suffix(')').ok_or_else(bad)?;
        let ctx = QContext::new(parse_rational(inner)?)?;
        let head = &t[..open];
        // split "a+b" / "a-b" at the last sign that is not a leading sign
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (rat, rad) = match split {
            Some(i) => {
                let rad = parse_rational(head[i..].trim_start_matches('+'))?;
                (parse_rational(&head[..i])?, rad)
            }
            None => (Rational::zero(), parse_rational(head)?),
        };
        Ok(QScalar::new(rat, rad, &ctx))
    }
}
