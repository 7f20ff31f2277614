//! Closed-form FC-centers and escape witnesses for infinite conjugacy classes.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteSubset, Group, GroupSpec, SetOracle};
use crate::groups::{Affine, FinitePermutation, Triple};
use crate::num::{Dyadic, Ring};

/// Membership in `FC(G)`, the elements with finite conjugacy class.
pub fn fc_oracle(group: &Arc<Group>) -> SetOracle {
    match group.spec() {
        GroupSpec::Integers | GroupSpec::IntegersSquared => SetOracle::new("fc: whole group (abelian)", |_| true),
        GroupSpec::ReducedPower { .. } => SetOracle::new("fc: whole group (finite coordinates)", |_| true),
        GroupSpec::HeisInt | GroupSpec::HeisDyadic => {
            let g = group.clone();
            SetOracle::new("fc: center {(0,0,c)}", move |x| g.is_central(x))
        }
        GroupSpec::Free { .. } | GroupSpec::FinSym | GroupSpec::AffineDyadic => {
            let e = group.identity();
            SetOracle::new("fc: trivial (icc)", move |x| *x == e)
        }
    }
}

/// A conjugator moving `y` out of a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Escape {
    /// `x` with `x^{-1} y x ∉ F`.
    pub conjugator: Element,
    /// `x^{-1} y x`.
    pub image: Element,
    /// Which construction produced the conjugator.
    pub route: &'static str,
}

/// Finds `x` with `x^{-1} y x ∉ F`, for `y` outside `FC(G)`.
///
/// Uses the closed-form constructions for the affine, Heisenberg and finitary
/// symmetric groups; free groups are searched in enumeration order over at
/// most `budget` candidates.
pub fn icc_witness(group: &Arc<Group>, y: &Element, f: &FiniteSubset, budget: usize) -> Result<Escape> {
    if fc_oracle(group).contains(y) {
        return Err(Error::Precondition(format!(
            "{} has a finite conjugacy class in {}",
            group.encode(y),
            group.id()
        )));
    }
    let (conjugator, route) = match y {
        Element::Affine(a) => (affine_escape(a, f), "affine case split"),
        Element::HeisInt(t) => (
            heis_escape(t, f, |g| match g {
                Element::HeisInt(t) => Some(t),
                _ => None,
            }, Element::HeisInt),
            "heisenberg case split",
        ),
        Element::HeisDyadic(t) => (
            heis_escape(t, f, |g| match g {
                Element::HeisDyadic(t) => Some(t),
                _ => None,
            }, Element::HeisDyadic),
            "heisenberg case split",
        ),
        Element::Perm(p) => (finsym_escape(p, f), "support transposition"),
        Element::Word(_) => (search_escape(group, y, f, budget)?, "enumeration search"),
        _ => unreachable!("fc oracle covers the remaining families"),
    };
    let image = group.conjugate(&conjugator, y);
    debug_assert!(!f.contains(&image));
    Ok(Escape { conjugator, image, route })
}

/// Ring elements `0, 1, -1, 2, -2, ...`.
fn ring_candidates<R: Ring>() -> impl Iterator<Item = R> {
    (0i64..).map(|k| R::from_i64(if k % 2 == 1 { k / 2 + 1 } else { -(k / 2) }))
}

/// `g = (x, r)` with `g y g^{-1} = (y, r + s x - r y) ∉ F`; returns `g^{-1}`.
fn affine_escape(target: &Affine, f: &FiniteSubset) -> Element {
    let shifts: BTreeSet<Dyadic> = f
        .iter()
        .filter_map(|g| match g {
            Element::Affine(a) if a.scale == target.scale => Some(a.shift.clone()),
            _ => None,
        })
        .collect();
    let g = if !target.shift.is_zero() {
        // r = 0, x = 2^k with s x ∉ S
        let k = (0i64..)
            .map(|k| if k % 2 == 1 { k / 2 + 1 } else { -(k / 2) })
            .find(|&k| !shifts.contains(&target.shift.mul_pow2(k)))
            .expect("S is finite");
        Affine::new(k, Dyadic::zero())
    } else {
        // x = 1, r with r (1 - y) ∉ S; y ≠ 1 here
        let one_minus_y = Dyadic::one().sub(&target.multiplier());
        let r = ring_candidates::<Dyadic>()
            .find(|r| !shifts.contains(&r.mul(&one_minus_y)))
            .expect("S is finite");
        Affine::new(0, r)
    };
    Element::Affine(g.inverse())
}

/// `g = (a, b, 0)` with `g y g^{-1} = (p, q, r + a q - b p) ∉ F`; returns `g^{-1}`.
fn heis_escape<R: Ring>(
    target: &Triple<R>,
    f: &FiniteSubset,
    view: fn(&Element) -> Option<&Triple<R>>,
    wrap: fn(Triple<R>) -> Element,
) -> Element {
    let centrals: BTreeSet<R> = f
        .iter()
        .filter_map(view)
        .filter(|t| t.a == target.a && t.b == target.b)
        .map(|t| t.c.clone())
        .collect();
    let Triple { a: p, b: q, c: r } = target;
    let g = if !p.is_zero() {
        let b = ring_candidates::<R>()
            .find(|b| !centrals.contains(&r.sub(&b.mul(p))))
            .expect("S is finite");
        Triple::new(R::zero(), b, R::zero())
    } else {
        let a = ring_candidates::<R>()
            .find(|a| !centrals.contains(&r.add(&a.mul(q))))
            .expect("S is finite");
        Triple::new(a, R::zero(), R::zero())
    };
    wrap(g.inverse())
}

/// The transposition `(a m)` where `a` is the largest point moved by `y`
/// and `m` lies beyond every support in `F`.
fn finsym_escape(y: &FinitePermutation, f: &FiniteSubset) -> Element {
    let a = y.max_moved().expect("y is not the identity");
    let beyond = f
        .iter()
        .filter_map(|g| g.as_perm().and_then(FinitePermutation::max_moved))
        .chain([a])
        .max()
        .expect("nonempty")
        + 1;
    Element::Perm(FinitePermutation::transposition(a, beyond))
}

fn search_escape(group: &Group, y: &Element, f: &FiniteSubset, budget: usize) -> Result<Element> {
    (0..budget)
        .map(|k| group.enumerate(k))
        .find(|x| !f.contains(&group.conjugate(x, y)))
        .ok_or_else(|| Error::Budget {
            what: format!("escape search for {} in {}", group.encode(y), group.id()),
            limit: budget as u64,
            reached: budget as u64,
        })
}
