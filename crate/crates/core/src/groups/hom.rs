//! Surjective homomorphisms with explicit sections.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, Group, GroupSpec};
use crate::groups::{FinitePermutation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// `g_i ↦ (i i+1)` from the free group of countable rank.
    FreeOntoFinSym,
    /// `(a,b,c) ↦ (a,b)`.
    HeisAbelianization,
}

/// A surjection `source → target` with a right inverse.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Arc<Group>,
    target: Arc<Group>,
    kind: Kind,
}

impl Homomorphism {
    /// `free:w->finsym` or `heis:int->int2`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let kind = match spec {
            "free:w->finsym" => Kind::FreeOntoFinSym,
            "heis:int->int2" => Kind::HeisAbelianization,
            _ => return Err(Error::Usage(format!("unknown homomorphism {spec:?}"))),
        };
        let (source, target) = match kind {
            Kind::FreeOntoFinSym => (GroupSpec::Free { rank: None }, GroupSpec::FinSym),
            Kind::HeisAbelianization => (GroupSpec::HeisInt, GroupSpec::IntegersSquared),
        };
        Ok(Self {
            source: Group::new(source),
            target: Group::new(target),
            kind,
        })
    }

    pub fn id(&self) -> String {
        format!("{}->{}", self.source.id(), self.target.id())
    }

    pub fn source(&self) -> &Arc<Group> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    pub fn apply(&self, g: &Element) -> Element {
        match (self.kind, g) {
            (Kind::FreeOntoFinSym, Element::Word(w)) => {
                let p = w
                    .syllables()
                    .iter()
                    .filter(|(_, k)| k % 2 != 0)
                    .fold(FinitePermutation::identity(), |acc, &(i, _)| {
                        acc.then(&FinitePermutation::transposition(i, i + 1))
                    });
                Element::Perm(p)
            }
            (Kind::HeisAbelianization, Element::HeisInt(t)) => Element::Int2(t.a.clone(), t.b.clone()),
            _ => panic!("{} is not in the source of {}", g.family(), self.id()),
        }
    }

    /// A preimage of `x`: the shortest word for permutations, `(a,b,0)` for pairs.
    pub fn section(&self, x: &Element) -> Element {
        match (self.kind, x) {
            (Kind::FreeOntoFinSym, Element::Perm(p)) => {
                let letters: Vec<i32> = p.adjacent_word().iter().map(|&i| i as i32 + 1).collect();
                Element::Word(Word::from_letters(&letters))
            }
            (Kind::HeisAbelianization, Element::Int2(a, b)) => {
                Element::HeisInt(crate::groups::Triple::new(a.clone(), b.clone(), crate::num::Integer::ZERO))
            }
            _ => panic!("{} is not in the target of {}", x.family(), self.id()),
        }
    }
}
