//! The affine group `P × R` with `R` the dyadic rationals and `P` the
//! multiplicative group of integer powers of two.

use crate::num::Dyadic;

/// `(2^scale, shift)` with `(x,r)(y,s) = (xy, r + s x)`; the image of the
/// matrix `[[x, r], [0, 1]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub scale: i64,
    pub shift: Dyadic,
}

impl Affine {
    pub fn new(scale: i64, shift: Dyadic) -> Self {
        Self { scale, shift }
    }

    pub fn identity() -> Self {
        Self::new(0, Dyadic::zero())
    }

    pub fn multiplier(&self) -> Dyadic {
        Dyadic::pow2(self.scale)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            scale: self
                .scale
                .checked_add(rhs.scale)
                .expect("power-of-two exponent overflow"),
            shift: self.shift.add(&rhs.shift.mul_pow2(self.scale)),
        }
    }

    /// `(x,r)^{-1} = (x^{-1}, -r x^{-1})`.
    pub fn inverse(&self) -> Self {
        Self {
            scale: -self.scale,
            shift: self.shift.neg().mul_pow2(-self.scale),
        }
    }

    pub fn encode(&self) -> String {
        format!("({},{})", self.multiplier(), self.shift)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let inner = s.strip_prefix('(')?.strip_suffix(')')?;
        let (x, r) = inner.split_once(',')?;
        let x: Dyadic = x.parse().ok()?;
        let r: Dyadic = r.parse().ok()?;
        // x must be a power of two: numerator 1 with exponent k, or 2^k / 2^0
        let scale = if x.exponent() > 0 {
            if *x.numerator() != crate::num::Integer::ONE {
                return None;
            }
            -(x.exponent() as i64)
        } else {
            let tz = x.numerator().trailing_zeros()?;
            if x.numerator().signum() < 0 || x.numerator().shr_exact(tz) != crate::num::Integer::ONE {
                return None;
            }
            tz as i64
        };
        Some(Self::new(scale, r))
    }
}
