//! Search for `x ∉ F V ∪ F x (F \ V)` and its pullback along a quotient map.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteSubset, Group, SetOracle};
use crate::groups::{fc_oracle, Homomorphism};

/// Outcome of the two clause tests for one candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clauses {
    /// `x ∉ F V`.
    pub outside_fv: bool,
    /// `x ∉ F x (F \ V)`.
    pub outside_fxfv: bool,
}

impl Clauses {
    pub fn holds(&self) -> bool {
        self.outside_fv && self.outside_fxfv
    }
}

/// Clause test as used by the search: `f^{-1} x ∉ V` for `f ∈ F`, and
/// `x^{-1} w x ∉ F \ V` for `w ∈ F^{-1}`.
pub fn clauses(group: &Group, v: &SetOracle, f: &FiniteSubset, x: &Element) -> Clauses {
    let f_inv: Vec<Element> = f.iter().map(|fi| group.inv(fi)).collect();
    clauses_with(group, v, f, &f_inv, x)
}

fn clauses_with(group: &Group, v: &SetOracle, f: &FiniteSubset, f_inv: &[Element], x: &Element) -> Clauses {
    let outside_fv = f_inv.iter().all(|w| !v.contains(&group.mul(w, x)));
    let x_inv = group.inv(x);
    let outside_fxfv = f_inv.iter().all(|w| {
        let c = group.mul3(&x_inv, w, x);
        !(f.contains(&c) && !v.contains(&c))
    });
    Clauses {
        outside_fv,
        outside_fxfv,
    }
}

/// The same clauses by direct expansion: no `f v = x` with `v ∈ V`, and no
/// `f x u = x` with `u ∈ F \ V`.
pub fn clauses_direct(group: &Group, v: &SetOracle, f: &FiniteSubset, x: &Element) -> Clauses {
    let f_minus_v: Vec<&Element> = f.iter().filter(|u| !v.contains(u)).collect();
    let outside_fv = f.iter().all(|fi| !v.contains(&group.mul(&group.inv(fi), x)));
    let outside_fxfv = f
        .iter()
        .all(|fi| f_minus_v.iter().all(|u| group.mul3(fi, x, u) != *x));
    Clauses {
        outside_fv,
        outside_fxfv,
    }
}

/// A condition-(i) element with the escaping conjugates of `F^{-1} \ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionWitness {
    pub x: Element,
    pub candidate_index: usize,
    /// `(w, x^{-1} w x)` for each `w ∈ F^{-1} \ V`.
    pub escapes: Vec<(Element, Element)>,
}

/// First element of the enumeration, among `budget` candidates, satisfying
/// both clauses; `None` when the budget runs out.
pub fn condition_i_search(group: &Group, v: &SetOracle, f: &FiniteSubset, budget: usize) -> Option<ConditionWitness> {
    let f_inv: Vec<Element> = f.iter().map(|fi| group.inv(fi)).collect();
    // rejections tend to repeat, so the last rejecting index is moved to the front
    let mut order_fv: Vec<usize> = (0..f_inv.len()).collect();
    let mut order_fxfv = order_fv.clone();
    let rejects = |order: &mut Vec<usize>, hit: &dyn Fn(&Element) -> bool| -> bool {
        match order.iter().position(|&i| hit(&f_inv[i])) {
            Some(p) => {
                let i = order.remove(p);
                order.insert(0, i);
                true
            }
            None => false,
        }
    };
    let (candidate_index, x) = (0..budget).map(|k| (k, group.enumerate(k))).find(|(_, x)| {
        if rejects(&mut order_fv, &|w| v.contains(&group.mul(w, x))) {
            return false;
        }
        let x_inv = group.inv(x);
        !rejects(&mut order_fxfv, &|w| {
            let c = group.mul3(&x_inv, w, x);
            f.contains(&c) && !v.contains(&c)
        })
    })?;
    let escapes = f
        .inverse(group)
        .iter()
        .filter(|w| !v.contains(w))
        .map(|w| (w.clone(), group.conjugate(&x, w)))
        .collect();
    Some(ConditionWitness {
        x,
        candidate_index,
        escapes,
    })
}

/// [`condition_i_search`] with `V = FC(G)`.
pub fn fc_condition_i(group: &Arc<Group>, f: &FiniteSubset, budget: usize) -> Option<ConditionWitness> {
    condition_i_search(group, &fc_oracle(group), f, budget)
}

/// `π^{-1}(V)` as an oracle on the source.
pub fn preimage(hom: &Homomorphism, v: &SetOracle) -> SetOracle {
    let (hom, v) = (hom.clone(), v.clone());
    SetOracle::new(format!("preimage of {}", v.description()), move |g| v.contains(&hom.apply(g)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    /// Witness found in the target for `π(F)`.
    pub target_witness: Element,
    /// `section(target_witness)`.
    pub lifted: Element,
    /// Clauses for the lift in the source, against `U = π^{-1}(V)`.
    pub source_clauses: Clauses,
}

/// Finds a target witness for `π(F)` and `V`, lifts it through the section and
/// re-checks both clauses in the source against `π^{-1}(V)`.
pub fn pullback_check(hom: &Homomorphism, v: &SetOracle, f: &FiniteSubset, budget: usize) -> Result<Pullback> {
    let target = hom.target();
    let image: FiniteSubset = f.iter().map(|g| hom.apply(g)).collect();
    let found = condition_i_search(target, v, &image, budget).ok_or_else(|| Error::Budget {
        what: format!("condition (i) search in {} for the image of F", target.id()),
        limit: budget as u64,
        reached: budget as u64,
    })?;
    let lifted = hom.section(&found.x);
    let u = preimage(hom, v);
    let source_clauses = clauses_direct(hom.source(), &u, f, &lifted);
    Ok(Pullback {
        target_witness: found.x,
        lifted,
        source_clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Exhaustion, Schedule, SetSpec};

    fn group(s: &str) -> Arc<Group> {
        Group::from_spec_str(s).unwrap()
    }

    #[test]
    fn integers_with_even_set_never_escape() {
        let g = group("int");
        let v = SetSpec::Even.oracle(&g).unwrap();
        let f: FiniteSubset = (-1..=1).map(Element::from).collect();
        assert!(condition_i_search(&g, &v, &f, 10_000).is_none());
        // oracle: every candidate lies in F V since consecutive integers cover both parities
        for k in 0..200 {
            let x = g.enumerate(k);
            let n = x.as_int().unwrap().to_i64().unwrap();
            assert!([-1i64, 0, 1].iter().any(|fi| (n - fi) % 2 == 0));
        }
    }

    #[test]
    fn finsym_with_trivial_set() {
        let g = group("finsym");
        let v = SetSpec::Identity.oracle(&g).unwrap();
        let f: FiniteSubset = ["", "0>1,1>0"].iter().map(|s| g.parse(s).unwrap()).collect();
        let w = condition_i_search(&g, &v, &f, 100).unwrap();
        assert!(clauses_direct(&g, &v, &f, &w.x).holds());
        // (1 2) satisfies both clauses as well
        assert!(clauses_direct(&g, &v, &f, &g.parse("1>2,2>1").unwrap()).holds());
    }

    #[test]
    fn heisenberg_witness_leaves_the_center_coset() {
        let g = group("heis:int");
        let f: FiniteSubset = ["(0,0,0)", "(1,0,0)"].iter().map(|s| g.parse(s).unwrap()).collect();
        let w = fc_condition_i(&g, &f, 10_000).unwrap();
        let Element::HeisInt(t) = &w.x else { panic!() };
        let ab = (t.a.to_i64().unwrap(), t.b.to_i64().unwrap());
        assert!(ab != (0, 0) && ab != (1, 0));
        assert!(clauses_direct(&g, &fc_oracle(&g), &f, &w.x).holds());
        assert_eq!(w.escapes.len(), 1);
    }

    #[test]
    fn abelian_fc_covers_everything() {
        let g = group("int");
        let f1 = Exhaustion::new(g.clone(), Schedule::default()).level(1).unwrap();
        assert!(fc_condition_i(&g, &f1, 1000).is_none());
    }

    #[test]
    fn pullback_through_free_group() {
        let hom = Homomorphism::from_spec("free:w->finsym").unwrap();
        let src = hom.source().clone();
        let v = SetSpec::Identity.oracle(hom.target()).unwrap();
        let f: FiniteSubset = ["", "a"].iter().map(|s| src.parse(s).unwrap()).collect();
        let pb = pullback_check(&hom, &v, &f, 1000).unwrap();
        assert!(pb.source_clauses.holds());
        assert_eq!(hom.apply(&pb.lifted), pb.target_witness);
        assert!(!preimage(&hom, &v).contains(&pb.lifted));
    }
}
