//! Two disjoint sets `S_0`, `S_1` built from a doubled separation sequence.

use super::separation::lemma_sep_build;
use super::WitnessSequence;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteSubset, Group, Side};

#[derive(Clone, Debug)]
pub struct TwoPointWitness {
    /// `z[i][m]` for `i ∈ {0,1}` and the `m`-th set of the family.
    pub z: [Vec<Element>; 2],
    /// `W_i = ⋃_K K z_{iK}`.
    pub w: [FiniteSubset; 2],
    /// `S_i = ⋃_{K≠L} K z_{iK} z_{iL}^{-1}`.
    pub s: [FiniteSubset; 2],
    pub sequence: WitnessSequence,
}

/// The family `(0,K_0), (1,K_0), (0,K_1), (1,K_1), ...` used as index set.
pub fn doubled_family(family: &[FiniteSubset]) -> Vec<FiniteSubset> {
    family.iter().flat_map(|k| [k.clone(), k.clone()]).collect()
}

/// Splits an interleaved sequence into its two halves.
pub fn split_doubled(z: &[Element]) -> [Vec<Element>; 2] {
    [
        z.iter().step_by(2).cloned().collect(),
        z.iter().skip(1).step_by(2).cloned().collect(),
    ]
}

/// Assembles `W_i` and `S_i`. Distinct family positions count as distinct sets.
pub fn assemble(group: &Group, family: &[FiniteSubset], z: &[Vec<Element>; 2]) -> ([FiniteSubset; 2], [FiniteSubset; 2]) {
    let build = |i: usize| {
        let w: FiniteSubset = family
            .iter()
            .zip(&z[i])
            .flat_map(|(k, zk)| k.translate(group, zk, Side::Right).as_slice().to_vec())
            .collect();
        let mut parts = Vec::new();
        for (m, k) in family.iter().enumerate() {
            for l in 0..family.len() {
                if l != m {
                    let shift = group.mul(&z[i][m], &group.inv(&z[i][l]));
                    parts.extend(k.translate(group, &shift, Side::Right).as_slice().iter().cloned());
                }
            }
        }
        (w, parts.into_iter().collect::<FiniteSubset>())
    };
    let (w0, s0) = build(0);
    let (w1, s1) = build(1);
    ([w0, w1], [s0, s1])
}

pub fn twopoint_build(group: &Group, family: &[FiniteSubset], budget: usize) -> Result<TwoPointWitness> {
    if family.is_empty() {
        return Err(Error::Precondition("empty set family".into()));
    }
    let sequence = lemma_sep_build(group, &doubled_family(family), budget)?;
    let z = split_doubled(&sequence.elements);
    let (w, s) = assemble(group, family, &z);
    Ok(TwoPointWitness { z, w, s, sequence })
}

/// `W_i z_{iK}^{-1} ⊆ K ∪ S_i` for every family member; returns the first
/// `(i, m, element)` that escapes.
pub fn cover_failure(group: &Group, family: &[FiniteSubset], z: &[Vec<Element>; 2], w: &[FiniteSubset; 2], s: &[FiniteSubset; 2]) -> Option<(usize, usize, Element)> {
    for i in 0..2 {
        for (m, k) in family.iter().enumerate() {
            let shifted = w[i].translate(group, &group.inv(&z[i][m]), Side::Right);
            if let Some(x) = shifted.iter().find(|x| !k.contains(x) && !s[i].contains(x)) {
                return Some((i, m, x.clone()));
            }
        }
    }
    None
}
