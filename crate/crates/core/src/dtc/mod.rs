//! Finite-scale constructions: separation sequences, two-point sets, the
//! condition-(i) search, the `x_n` recursion and the symmetrization data,
//! each with a verifier that does not read builder traces.

pub mod condition;
pub mod separation;
pub mod symmetrize;
pub mod twopoint;
pub mod xn;

use serde::{Deserialize, Serialize};

use crate::group::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceKind {
    SeparationZ,
    TwopointZ,
    Xn,
}

/// One greedy step: how many elements were forbidden and which enumeration
/// index was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTrace {
    pub forbidden: usize,
    pub candidate_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSequence {
    pub kind: SequenceKind,
    pub elements: Vec<Element>,
    pub trace: Vec<StepTrace>,
}

impl WitnessSequence {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
