use crate::exactnum::Scalar;

/// A 2×2 matrix `(a b / c d)` acting by `W(x, y) ↦ W(ax+by, cx+dy)`.
///
/// With this action, substituting `M` and then `N` equals substituting the
/// product `M·N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Matrix2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    /// `(0 1 / 1 0)`, exchanging x and y.
    pub fn swap() -> Self {
        Self::new(S::zero(), S::one(), S::one(), S::zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        )
    }

    pub fn det(&self) -> S {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.a.mul_ref(s),
            self.b.mul_ref(s),
            self.c.mul_ref(s),
            self.d.mul_ref(s),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    #[test]
    fn products_and_determinant() {
        let m: Matrix2<Rational> = Matrix2::new(int(1), int(2), int(3), int(4));
        assert_eq!(m.mul(&Matrix2::identity()), m);
        assert_eq!(m.det(), int(-2));
        let s = Matrix2::<Rational>::swap();
        assert_eq!(s.mul(&s), Matrix2::identity());
        assert_eq!(m.scale(&int(2)).det(), int(-8));
    }
}
