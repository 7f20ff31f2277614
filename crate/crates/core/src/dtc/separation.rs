//! Sequences `z_α` with `F_α z_α z_γ^{-1} ∩ F_β z_β z_δ^{-1} = ∅` for
//! distinct indices.

use std::collections::HashSet;

use super::{SequenceKind, StepTrace, WitnessSequence};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteSubset, Group};

/// Greedy construction: `z_0 = z_1 = z_2 = e`, and each later `z_β` is the
/// first element in enumeration order outside
/// `F_β^{-1} F_α z_α z_γ^{-1} z_δ ∪ z_γ z_α^{-1} F_α^{-1} F_δ z_δ`
/// over ordered triples of distinct earlier indices.
pub fn lemma_sep_build(group: &Group, family: &[FiniteSubset], budget: usize) -> Result<WitnessSequence> {
    let mut z: Vec<Element> = Vec::with_capacity(family.len());
    let mut trace = Vec::with_capacity(family.len());
    let inverses: Vec<FiniteSubset> = family.iter().map(|f| f.inverse(group)).collect();
    for beta in 0..family.len() {
        if beta < 3 {
            z.push(group.identity());
            trace.push(StepTrace {
                forbidden: 0,
                candidate_index: 0,
            });
            continue;
        }
        let mut forbidden: HashSet<Element> = HashSet::new();
        for alpha in 0..beta {
            for gamma in 0..beta {
                for delta in 0..beta {
                    if alpha == gamma || alpha == delta || gamma == delta {
                        continue;
                    }
                    // F_β^{-1} F_α z_α z_γ^{-1} z_δ
                    let tail = group.mul3(&z[alpha], &group.inv(&z[gamma]), &z[delta]);
                    for fb in inverses[beta].iter() {
                        for fa in family[alpha].iter() {
                            forbidden.insert(group.mul3(fb, fa, &tail));
                        }
                    }
                    // z_γ z_α^{-1} F_α^{-1} F_δ z_δ
                    let head = group.mul(&z[gamma], &group.inv(&z[alpha]));
                    for fa in inverses[alpha].iter() {
                        let left = group.mul(&head, fa);
                        for fd in family[delta].iter() {
                            forbidden.insert(group.mul3(&left, fd, &z[delta]));
                        }
                    }
                }
            }
        }
        let (index, chosen) = (0..budget)
            .map(|k| (k, group.enumerate(k)))
            .find(|(_, g)| !forbidden.contains(g))
            .ok_or_else(|| Error::Budget {
                what: format!("separation step {beta}: {} forbidden elements", forbidden.len()),
                limit: budget as u64,
                reached: budget as u64,
            })?;
        trace.push(StepTrace {
            forbidden: forbidden.len(),
            candidate_index: index,
        });
        z.push(chosen);
    }
    Ok(WitnessSequence {
        kind: SequenceKind::SeparationZ,
        elements: z,
        trace,
    })
}

/// A quadruple of distinct indices whose translates meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationFailure {
    /// `(α, β, γ, δ)`.
    pub indices: [usize; 4],
    pub common: Element,
}

/// Checks every ordered choice of four distinct indices.
pub fn lemma_sep_verify(group: &Group, family: &[FiniteSubset], z: &[Element]) -> Result<Option<SeparationFailure>> {
    if family.len() != z.len() {
        return Err(Error::Precondition(format!(
            "{} sets but {} sequence elements",
            family.len(),
            z.len()
        )));
    }
    let n = z.len();
    // translates[α][γ] = F_α z_α z_γ^{-1}
    let translates: Vec<Vec<FiniteSubset>> = (0..n)
        .map(|alpha| {
            (0..n)
                .map(|gamma| {
                    let shift = group.mul(&z[alpha], &group.inv(&z[gamma]));
                    family[alpha].translate(group, &shift, crate::group::Side::Right)
                })
                .collect()
        })
        .collect();
    for alpha in 0..n {
        for beta in 0..n {
            for gamma in 0..n {
                for delta in 0..n {
                    let idx = [alpha, beta, gamma, delta];
                    if (0..4).any(|p| (p + 1..4).any(|q| idx[p] == idx[q])) {
                        continue;
                    }
                    let meet = translates[alpha][gamma].intersection(&translates[beta][delta]);
                    if let Some(common) = meet.iter().next() {
                        return Ok(Some(SeparationFailure {
                            indices: idx,
                            common: common.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
