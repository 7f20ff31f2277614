//! Heisenberg groups `R × R × R` over an integral domain `R`.

use crate::num::Ring;

/// `(a, b, c)` with `(a,b,c)(p,q,r) = (a+p, b+q, c+r+aq)`; the image of
/// the unipotent matrix `[[1,a,c],[0,1,b],[0,0,1]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R: Ring> Triple<R> {
    pub fn new(a: R, b: R, c: R) -> Self {
        Self { a, b, c }
    }

    pub fn identity() -> Self {
        Self::new(R::zero(), R::zero(), R::zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            c: self.c.add(&rhs.c).add(&self.a.mul(&rhs.b)),
        }
    }

    /// `(a,b,c)^{-1} = (-a, -b, ab - c)`.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.a.mul(&self.b).sub(&self.c),
        }
    }

    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn encode(&self) -> String {
        format!("({},{},{})", self.a, self.b, self.c)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let inner = s.strip_prefix('(')?.strip_suffix(')')?;
        let mut it = inner.split(',');
        let a = R::parse(it.next()?)?;
        let b = R::parse(it.next()?)?;
        let c = R::parse(it.next()?)?;
        if it.next().is_some() {
            return None;
        }
        Some(Self::new(a, b, c))
    }

    /// Row-major entries of the 3×3 matrix image.
    pub fn matrix(&self) -> [[R; 3]; 3] {
        let (z, o) = (R::zero(), R::one());
        [
            [o.clone(), self.a.clone(), self.c.clone()],
            [z.clone(), o.clone(), self.b.clone()],
            [z.clone(), z, o],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Integer;

    fn t(a: i64, b: i64, c: i64) -> Triple<Integer> {
        Triple::new(a.into(), b.into(), c.into())
    }

    #[test]
    fn product_and_inverse() {
        assert_eq!(t(1, 0, 0).mul(&t(0, 1, 0)), t(1, 1, 1));
        assert_eq!(t(1, 2, 3).inverse(), t(-1, -2, -1));
        assert_eq!(t(1, 2, 3).mul(&t(1, 2, 3).inverse()), Triple::identity());
    }

    #[test]
    fn text_form() {
        assert_eq!(t(1, -2, 0).encode(), "(1,-2,0)");
        assert_eq!(Triple::<Integer>::parse("(1,-2,0)"), Some(t(1, -2, 0)));
        assert!(Triple::<Integer>::parse("(1,2)").is_none());
        assert!(Triple::<Integer>::parse("1,2,3").is_none());
    }
}
