use crate::groups::{Affine, FinitePermutation, Reduced, Triple, Word};
use crate::num::{Dyadic, Integer};

/// A canonical element of one of the supported groups. The variant is the
/// group family; structural equality coincides with group equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(Integer),
    Int2(Integer, Integer),
    Word(Word),
    Perm(FinitePermutation),
    Affine(Affine),
    HeisInt(Triple<Integer>),
    HeisDyadic(Triple<Dyadic>),
    Reduced(Reduced),
}

impl Element {
    pub fn family(&self) -> &'static str {
        match self {
            Element::Int(_) => "int",
            Element::Int2(..) => "int2",
            Element::Word(_) => "free",
            Element::Perm(_) => "finsym",
            Element::Affine(_) => "affine-dyadic",
            Element::HeisInt(_) => "heis:int",
            Element::HeisDyadic(_) => "heis:dyadic",
            Element::Reduced(_) => "redpow",
        }
    }

    pub fn as_int(&self) -> Option<&Integer> {
        match self {
            Element::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_perm(&self) -> Option<&FinitePermutation> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_reduced(&self) -> Option<&Reduced> {
        match self {
            Element::Reduced(r) => Some(r),
            _ => None,
        }
    }
}

impl From<i64> for Element {
    fn from(n: i64) -> Self {
        Element::Int(Integer::from(n))
    }
}
