use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Integer;

/// A dyadic rational `numerator / 2^exponent` in lowest terms.
///
/// Canonical: the numerator is odd, or it is zero and the exponent is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: Integer,
    exponent: u64,
}

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic {
            numerator: Integer::ZERO,
            exponent: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic::from_integer(Integer::ONE)
    }

    pub fn from_integer(n: Integer) -> Dyadic {
        Dyadic::new(n, 0)
    }

    /// Builds `n / 2^k` and reduces it.
    pub fn new(n: Integer, k: u64) -> Dyadic {
        match n.trailing_zeros() {
            None => Dyadic::zero(),
            Some(tz) => {
                let drop = tz.min(k);
                Dyadic {
                    numerator: n.shr_exact(drop),
                    exponent: k - drop,
                }
            }
        }
    }

    /// `2^k` for any integer `k`.
    pub fn pow2(k: i64) -> Dyadic {
        if k >= 0 {
            Dyadic::from_integer(Integer::ONE.shl(k as u64))
        } else {
            Dyadic {
                numerator: Integer::ONE,
                exponent: k.unsigned_abs(),
            }
        }
    }

    pub fn numerator(&self) -> &Integer {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0 && self.numerator == Integer::ONE
    }

    pub fn add(&self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let k = self.exponent.max(rhs.exponent);
        let a = self.numerator.shl(k - self.exponent);
        let b = rhs.numerator.shl(k - rhs.exponent);
        Dyadic::new(&a + &b, k)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }

    pub fn sub(&self, rhs: &Dyadic) -> Dyadic {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }

    /// `self * 2^k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        if k < 0 {
            return Dyadic::new(self.numerator.clone(), self.exponent + k.unsigned_abs());
        }
        let k = k as u64;
        if k <= self.exponent {
            Dyadic {
                numerator: self.numerator.clone(),
                exponent: self.exponent - k,
            }
        } else {
            Dyadic {
                numerator: self.numerator.shl(k - self.exponent),
                exponent: 0,
            }
        }
    }

    /// Height used by the enumeration shells: `max(|numerator|, exponent)`.
    pub fn height(&self) -> Integer {
        let a = self.numerator.abs();
        let e = Integer::from(self.exponent as i64);
        if a > e {
            a
        } else {
            e
        }
    }

    /// All dyadics of height at most `h`, in enumeration order.
    pub fn up_to_height(h: u64) -> Vec<Dyadic> {
        let mut out = Vec::new();
        for m in -(h as i64)..=(h as i64) {
            for k in 0..=h {
                let d = Dyadic::new(Integer::from(m), k);
                if d.exponent == k && d.numerator == Integer::from(m) {
                    out.push(d);
                }
            }
        }
        out.sort_by(|a, b| a.enum_key().cmp(&b.enum_key()));
        out
    }

    /// Sort key for enumeration: height, then exponent, then zig-zag numerator.
    pub fn enum_key(&self) -> (Integer, u64, Integer) {
        (self.height(), self.exponent, self.numerator.zigzag())
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        let k = self.exponent.max(other.exponent);
        let a = self.numerator.shl(k - self.exponent);
        let b = other.numerator.shl(k - other.exponent);
        a.cmp(&b)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = ();
    /// Accepts only the canonical `m/2^k` spelling.
    fn from_str(s: &str) -> Result<Self, ()> {
        let (m, k) = s.split_once("/2^").ok_or(())?;
        let m: Integer = m.parse()?;
        if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) || (k.len() > 1 && k.starts_with('0'))
        {
            return Err(());
        }
        let k: u64 = k.parse().map_err(|_| ())?;
        let d = Dyadic::new(m.clone(), k);
        if d.numerator != m || d.exponent != k {
            return Err(());
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, k: u64) -> Dyadic {
        Dyadic::new(Integer::from(m), k)
    }

    #[test]
    fn reduction() {
        assert_eq!(d(4, 3), d(1, 1));
        assert_eq!(d(0, 5).exponent(), 0);
        assert_eq!(d(6, 0).to_string(), "6/2^0");
        assert_eq!(d(-3, 2).to_string(), "-3/2^2");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(d(1, 1).add(&d(1, 1)), Dyadic::one());
        assert_eq!(d(3, 2).mul(&d(1, 1)), d(3, 3));
        assert_eq!(d(3, 2).mul_pow2(3), d(6, 0));
        assert_eq!(d(3, 0).mul_pow2(-2), d(3, 2));
        // even integer numerators must still reduce
        assert_eq!(d(2, 0).mul(&d(1, 1)), Dyadic::one());
        assert_eq!(d(4, 0).mul_pow2(-2).to_string(), "1/2^0");
        assert_eq!(d(-64, 0).mul_pow2(-5), d(-2, 0));
        assert_eq!(Dyadic::pow2(-3), d(1, 3));
        assert_eq!(Dyadic::pow2(4), d(16, 0));
        assert_eq!(d(1, 2).sub(&d(1, 2)), Dyadic::zero());
    }

    #[test]
    fn parse_round_trip_and_rejects_non_canonical() {
        for s in ["0/2^0", "1/2^3", "-5/2^0", "12/2^0"] {
            assert_eq!(s.parse::<Dyadic>().unwrap().to_string(), s);
        }
        for s in ["2/2^1", "0/2^1", "1/2", "1/2^01", "x/2^0"] {
            assert!(s.parse::<Dyadic>().is_err(), "{s}");
        }
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(d(1, 1) < Dyadic::one());
        assert!(d(-1, 0) < d(-1, 1));
        assert!(d(3, 2) > d(1, 1));
    }

    #[test]
    fn low_heights() {
        let got: Vec<String> = Dyadic::up_to_height(1).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["0/2^0", "1/2^0", "-1/2^0", "1/2^1", "-1/2^1"]);
    }
}
