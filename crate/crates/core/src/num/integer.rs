use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact integer that stays on the machine word until an operation overflows.
///
/// The representation is normalized: `Big` never holds a value that fits in
/// an `i64`, so structural equality and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    pub fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_odd(&self) -> bool {
        match self {
            Integer::Small(v) => v & 1 == 1,
            Integer::Big(b) => b.bit(0),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::from_big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Number of trailing zero bits; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<u64> {
        match self {
            Integer::Small(0) => None,
            Integer::Small(v) => Some(v.trailing_zeros() as u64),
            Integer::Big(b) => b.trailing_zeros(),
        }
    }

    /// `self * 2^k`.
    pub fn shl(&self, k: u64) -> Integer {
        if self.is_zero() {
            return Integer::ZERO;
        }
        if let Integer::Small(v) = self {
            if k < 62 {
                if let Some(r) = v.checked_mul(1i64 << k) {
                    return Integer::Small(r);
                }
            }
        }
        Integer::from_big(self.to_big() << k)
    }

    /// `self / 2^k`, exact; caller guarantees divisibility.
    pub fn shr_exact(&self, k: u64) -> Integer {
        if k == 0 {
            return self.clone();
        }
        match self {
            Integer::Small(v) => Integer::Small(v >> k),
            Integer::Big(b) => Integer::from_big(b >> k),
        }
    }

    /// Position in the zig-zag order 0, 1, -1, 2, -2, ...
    pub fn zigzag(&self) -> Integer {
        if self.signum() > 0 {
            &self.shl(1) - &Integer::ONE
        } else {
            (-self).shl(1)
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl<'a> Add<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn add(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_add(*b) {
                return Integer::Small(r);
            }
        }
        Integer::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn sub(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_sub(*b) {
                return Integer::Small(r);
            }
        }
        Integer::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn mul(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_mul(*b) {
                return Integer::Small(r);
            }
        }
        Integer::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(r) => Integer::Small(r),
                None => Integer::from_big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b.clone()),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            (Integer::Big(a), Integer::Big(b)) => a.cmp(b),
            // a normalized Big lies outside the i64 range, so its sign decides
            (Integer::Small(_), Integer::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Integer::Big(a), Integer::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(());
        }
        // reject non-canonical spellings such as "007" or "-0"
        if (digits.len() > 1 && digits.starts_with('0')) || s == "-0" {
            return Err(());
        }
        match s.parse::<i64>() {
            Ok(v) => Ok(Integer::Small(v)),
            Err(_) => BigInt::from_str(s).map(Integer::from_big).map_err(|_| ()),
        }
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        &self + &rhs
    }
}
