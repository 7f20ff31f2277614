//! Exact ring arithmetic: integers and dyadic rationals.

mod dyadic;
mod integer;

pub use dyadic::Dyadic;
pub use integer::Integer;

use std::fmt;
use std::hash::Hash;

/// The integral domains the Heisenberg construction is instantiated over.
pub trait Ring: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn parse(s: &str) -> Option<Self>;
    /// Elements of height at most `h`, in enumeration order; finite for every `h`.
    fn up_to_height(h: u64) -> Vec<Self>;
    fn height(&self) -> Integer;
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn one() -> Self {
        Integer::ONE
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }
    fn parse(s: &str) -> Option<Self> {
        s.parse().ok()
    }
    fn up_to_height(h: u64) -> Vec<Self> {
        let h = h as i64;
        let mut v: Vec<Integer> = (-h..=h).map(Integer::from).collect();
        v.sort_by_key(|x| x.zigzag());
        v
    }
    fn height(&self) -> Integer {
        self.abs()
    }
}

impl Ring for Dyadic {
    fn zero() -> Self {
        Dyadic::zero()
    }
    fn one() -> Self {
        Dyadic::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Dyadic::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Dyadic::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Dyadic::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Dyadic::neg(self)
    }
    fn is_zero(&self) -> bool {
        Dyadic::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Dyadic::from_integer(Integer::from(v))
    }
    fn parse(s: &str) -> Option<Self> {
        s.parse().ok()
    }
    fn up_to_height(h: u64) -> Vec<Self> {
        Dyadic::up_to_height(h)
    }
    fn height(&self) -> Integer {
        Dyadic::height(self)
    }
}
