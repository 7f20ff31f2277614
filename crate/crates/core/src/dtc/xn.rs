//! The sequence `x_0, x_1, ...` with translates `F_n x_n x_i^{-1}` pairwise
//! disjoint, and its verifiers.

use serde::{Deserialize, Serialize};

use super::{SequenceKind, StepTrace, WitnessSequence};
use crate::error::{Error, Result};
use crate::group::{Element, Exhaustion, FiniteSubset, SetOracle, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XnClause {
    /// `x_i^{-1} x_n ∉ V` for `i < n`.
    B1a,
    /// `x_n ∉ F_{n+1} x_k x_i^{-1} x_j` for `i, j < k < n`.
    B1b,
    /// `x_n (x_i^{-1} x_j) x_n^{-1} ∉ F_{n+1}` for `i < j < n`.
    B2,
}

/// Candidates rejected per clause, each counted under the first clause it broke.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseCounts {
    pub b1a: usize,
    pub b1b: usize,
    pub b2: usize,
}

impl ClauseCounts {
    fn bump(&mut self, clause: XnClause) {
        match clause {
            XnClause::B1a => self.b1a += 1,
            XnClause::B1b => self.b1b += 1,
            XnClause::B2 => self.b2 += 1,
        }
    }

    fn dominant(&self) -> XnClause {
        if self.b2 >= self.b1a.max(self.b1b) {
            XnClause::B2
        } else if self.b1b >= self.b1a {
            XnClause::B1b
        } else {
            XnClause::B1a
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XnFailure {
    pub step: usize,
    pub clause: XnClause,
    /// The clause fails for every candidate, so no budget can help.
    pub hereditary: bool,
    /// For a hereditary (b2) failure: the central `x_i^{-1} x_j` found in `F_{n+1}`.
    pub pair: Option<(usize, usize)>,
    pub scanned: usize,
    pub rejections: ClauseCounts,
    pub partial: Vec<Element>,
}

#[derive(Clone, Debug)]
pub enum XnOutcome {
    Built(WitnessSequence),
    Failed(XnFailure),
}

impl XnOutcome {
    pub fn sequence(&self) -> Option<&WitnessSequence> {
        match self {
            XnOutcome::Built(s) => Some(s),
            XnOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&XnFailure> {
        match self {
            XnOutcome::Built(_) => None,
            XnOutcome::Failed(f) => Some(f),
        }
    }
}

/// Chooses `x_0, ..., x_N` greedily in enumeration order, scanning at most
/// `budget` candidates per step. The trace records how many candidates were
/// rejected before each choice.
pub fn xn_build(ex: &Exhaustion, v: &SetOracle, n_max: usize, budget: usize) -> Result<XnOutcome> {
    let group = ex.group();
    let mut x: Vec<Element> = Vec::with_capacity(n_max + 1);
    let mut trace = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let next = ex.level(n + 1)?;
        let inverses: Vec<Element> = x.iter().map(|g| group.inv(g)).collect();
        let mut translates: Vec<Element> = Vec::new();
        for k in 0..n {
            for i in 0..k {
                for j in 0..k {
                    // x ∈ F t ⇔ x t^{-1} ∈ F
                    translates.push(group.inv(&group.mul3(&x[k], &inverses[i], &x[j])));
                }
            }
        }
        translates.sort();
        translates.dedup();
        let mut differences: Vec<(usize, usize, Element)> = Vec::new();
        for j in 0..n {
            for i in 0..j {
                differences.push((i, j, group.mul(&inverses[i], &x[j])));
            }
        }
        if let Some((i, j, _)) = differences
            .iter()
            .find(|(_, _, y)| group.is_central(y) && next.contains(y))
        {
            return Ok(XnOutcome::Failed(XnFailure {
                step: n,
                clause: XnClause::B2,
                hereditary: true,
                pair: Some((*i, *j)),
                scanned: 0,
                rejections: ClauseCounts::default(),
                partial: x,
            }));
        }
        let violated = |c: &Element| -> Option<XnClause> {
            if inverses.iter().any(|xi| v.contains(&group.mul(xi, c))) {
                return Some(XnClause::B1a);
            }
            if translates.iter().any(|t| next.contains(&group.mul(c, t))) {
                return Some(XnClause::B1b);
            }
            let c_inv = group.inv(c);
            if differences.iter().any(|(_, _, y)| next.contains(&group.mul3(c, y, &c_inv))) {
                return Some(XnClause::B2);
            }
            None
        };
        let mut counts = ClauseCounts::default();
        let mut chosen = None;
        for k in 0..budget {
            let c = group.enumerate(k);
            match violated(&c) {
                Some(clause) => counts.bump(clause),
                None => {
                    chosen = Some((k, c));
                    break;
                }
            }
        }
        let Some((index, c)) = chosen else {
            return Ok(XnOutcome::Failed(XnFailure {
                step: n,
                clause: counts.dominant(),
                hereditary: false,
                pair: None,
                scanned: budget,
                rejections: counts,
                partial: x,
            }));
        };
        trace.push(StepTrace {
            forbidden: index,
            candidate_index: index,
        });
        x.push(c);
    }
    Ok(XnOutcome::Built(WitnessSequence {
        kind: SequenceKind::Xn,
        elements: x,
        trace,
    }))
}

/// A pair of translates that meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AFailure {
    /// `"a1"` or `"a2"`.
    pub equation: &'static str,
    /// `(n, i, k, j)`: `F_n x_n x_i^{-1} ∩ F_k x_k x_j^{-1}` is nonempty.
    pub indices: [usize; 4],
    pub common: Element,
}

/// Exhaustively checks, for the levels of `ex`,
/// `F_n x_n x_i^{-1} ∩ F_k x_k x_j^{-1} = ∅` for `i, j < k < n` and
/// `F_n x_n x_i^{-1} ∩ F_n x_n x_j^{-1} = ∅` for `i < j < n`.
pub fn a_verify(ex: &Exhaustion, x: &[Element]) -> Result<Option<AFailure>> {
    let group = ex.group();
    let len = x.len();
    // t[n][i] = F_n x_n x_i^{-1}
    let mut t: Vec<Vec<FiniteSubset>> = Vec::with_capacity(len);
    for n in 0..len {
        let level = ex.level(n)?;
        let row = (0..n)
            .map(|i| level.translate(group, &group.mul(&x[n], &group.inv(&x[i])), Side::Right))
            .collect();
        t.push(row);
    }
    let meet = |a: &FiniteSubset, b: &FiniteSubset| a.intersection(b).iter().next().cloned();
    for n in 0..len {
        for j in 0..n {
            for i in 0..j {
                if let Some(common) = meet(&t[n][i], &t[n][j]) {
                    return Ok(Some(AFailure {
                        equation: "a2",
                        indices: [n, i, n, j],
                        common,
                    }));
                }
            }
        }
        for k in 0..n {
            for i in 0..k {
                for j in 0..k {
                    if let Some(common) = meet(&t[n][i], &t[k][j]) {
                        return Ok(Some(AFailure {
                            equation: "a1",
                            indices: [n, i, k, j],
                            common,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `W = ⋃_{n ≤ N} F_n x_n` for the given sequence.
pub fn w_set(ex: &Exhaustion, x: &[Element]) -> Result<FiniteSubset> {
    let group = ex.group();
    let mut all = Vec::new();
    for (n, xn) in x.iter().enumerate() {
        all.extend(ex.level(n)?.translate(group, xn, Side::Right).as_slice().iter().cloned());
    }
    Ok(all.into_iter().collect())
}

/// `W x_i^{-1} ∩ W x_j^{-1} ⊆ ⋃_{k ≤ j} F_k x_k x_j^{-1}`; returns an element
/// of the intersection outside the union.
pub fn w_translate_check(ex: &Exhaustion, x: &[Element], i: usize, j: usize) -> Result<Option<Element>> {
    w_translate_with(ex, x, &w_set(ex, x)?, i, j)
}

/// [`w_translate_check`] with `W` computed once by the caller.
pub fn w_translate_with(ex: &Exhaustion, x: &[Element], w: &FiniteSubset, i: usize, j: usize) -> Result<Option<Element>> {
    if !(i < j && j < x.len()) {
        return Err(Error::Precondition(format!("need i < j < {}, got i = {i}, j = {j}", x.len())));
    }
    let group = ex.group();
    let xj_inv = group.inv(&x[j]);
    let left = w.translate(group, &group.inv(&x[i]), Side::Right);
    let right = w.translate(group, &xj_inv, Side::Right);
    let mut allowed = Vec::new();
    for (k, xk) in x.iter().enumerate().take(j + 1) {
        let shift = group.mul(xk, &xj_inv);
        allowed.extend(ex.level(k)?.translate(group, &shift, Side::Right).as_slice().iter().cloned());
    }
    let allowed: FiniteSubset = allowed.into_iter().collect();
    Ok(left.intersection(&right).iter().find(|g| !allowed.contains(g)).cloned())
}

/// `W x_i^{-1} ∩ W x_j^{-1} ⊆ ⋃_{k ≤ j} F_k x_k x_j^{-1} ∪ ⋃_{n ≤ j} F_n x_n x_i^{-1}`.
///
/// The second union covers the terms with `n ≤ j < k`, which the disjointness
/// conditions do not exclude; the bound is still finite.
pub fn w_translate_bound(ex: &Exhaustion, x: &[Element], w: &FiniteSubset, i: usize, j: usize) -> Result<Option<Element>> {
    let Some(g) = w_translate_with(ex, x, w, i, j)? else {
        return Ok(None);
    };
    let group = ex.group();
    let xi_inv = group.inv(&x[i]);
    let mut extra = Vec::new();
    for (n, xn) in x.iter().enumerate().take(j + 1) {
        let shift = group.mul(xn, &xi_inv);
        extra.extend(ex.level(n)?.translate(group, &shift, Side::Right).as_slice().iter().cloned());
    }
    let extra: FiniteSubset = extra.into_iter().collect();
    if !extra.contains(&g) {
        return Ok(Some(g));
    }
    let xj_inv = group.inv(&x[j]);
    let left = w.translate(group, &xi_inv, Side::Right);
    let right = w.translate(group, &xj_inv, Side::Right);
    let mut allowed = extra.as_slice().to_vec();
    for (k, xk) in x.iter().enumerate().take(j + 1) {
        let shift = group.mul(xk, &xj_inv);
        allowed.extend(ex.level(k)?.translate(group, &shift, Side::Right).as_slice().iter().cloned());
    }
    let allowed: FiniteSubset = allowed.into_iter().collect();
    Ok(left.intersection(&right).iter().find(|g| !allowed.contains(g)).cloned())
}

/// All pairs `i < j` for [`w_translate_bound`].
pub fn w_translate_bound_all(ex: &Exhaustion, x: &[Element]) -> Result<Option<(usize, usize, Element)>> {
    let w = w_set(ex, x)?;
    for j in 0..x.len() {
        for i in 0..j {
            if let Some(g) = w_translate_bound(ex, x, &w, i, j)? {
                return Ok(Some((i, j, g)));
            }
        }
    }
    Ok(None)
}

/// Runs [`w_translate_check`] over all pairs `i < j`, returning the first
/// failing pair with its counterexample.
pub fn w_translate_all(ex: &Exhaustion, x: &[Element]) -> Result<Option<(usize, usize, Element)>> {
    let w = w_set(ex, x)?;
    for j in 0..x.len() {
        for i in 0..j {
            if let Some(g) = w_translate_with(ex, x, &w, i, j)? {
                return Ok(Some((i, j, g)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, Schedule, SetSpec};

    fn ex(s: &str) -> Exhaustion {
        Exhaustion::new(Group::from_spec_str(s).unwrap(), Schedule::default())
    }

    fn identity_set(e: &Exhaustion) -> SetOracle {
        SetSpec::Identity.oracle(e.group()).unwrap()
    }

    #[test]
    fn first_element_is_the_identity() {
        let e = ex("finsym");
        let out = xn_build(&e, &identity_set(&e), 0, 10).unwrap();
        assert_eq!(out.sequence().unwrap().elements, vec![e.group().identity()]);
    }

    #[test]
    fn integers_fail_hereditarily_on_b2() {
        let e = ex("int");
        let out = xn_build(&e, &identity_set(&e), 12, 10_000).unwrap();
        let fail = out.failure().unwrap();
        assert_eq!(fail.clause, XnClause::B2);
        assert!(fail.hereditary);
        assert!(fail.step <= 6);
        // x_0 = 0, x_1 = 1 and 1 ∈ F_3
        assert_eq!((fail.step, fail.pair), (2, Some((0, 1))));
    }

    #[test]
    fn short_free_sequence_verifies() {
        let e = ex("free:2");
        let out = xn_build(&e, &identity_set(&e), 4, 100_000).unwrap();
        let seq = out.sequence().unwrap();
        assert_eq!(seq.len(), 5);
        assert_eq!(seq.trace.len(), 5);
        assert_eq!(a_verify(&e, &seq.elements).unwrap(), None);
        assert_eq!(w_translate_check(&e, &seq.elements, 0, 1).unwrap(), None);
    }

    #[test]
    fn constant_sequence_fails_a2() {
        let e = ex("free:2");
        let x = vec![e.group().identity(); 4];
        let fail = a_verify(&e, &x).unwrap().unwrap();
        assert_eq!(fail.equation, "a2");
        assert_eq!(fail.indices[0], 2);
    }

    #[test]
    fn two_terms_pass_vacuously() {
        let e = ex("int");
        let x = vec![Element::from(0), Element::from(0)];
        assert_eq!(a_verify(&e, &x).unwrap(), None);
    }

    #[test]
    fn bad_pairs_are_rejected() {
        let e = ex("int");
        let x = vec![Element::from(0), Element::from(5)];
        assert!(w_translate_check(&e, &x, 1, 1).is_err());
        assert!(w_translate_check(&e, &x, 0, 2).is_err());
    }
}
