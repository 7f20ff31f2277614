//! Conjugacy classes and centralizer cosets truncated to exhaustion levels.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::group::{Element, Exhaustion, FiniteSubset, Group};

/// The conjugates `x^{-1} y x` for `x ∈ F_radius`, each with the first
/// conjugator (in canonical order) that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBall {
    pub base: Element,
    pub radius: usize,
    pub elements: FiniteSubset,
    pub witnesses: BTreeMap<Element, Element>,
}

impl ClassBall {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Re-derives every member from its stored conjugator.
    pub fn replay(&self, group: &Group) -> bool {
        self.witnesses.len() == self.elements.len()
            && self
                .witnesses
                .iter()
                .all(|(z, x)| self.elements.contains(z) && group.conjugate(x, &self.base) == *z)
    }
}

/// The solutions `x ∈ F_radius` of `x^{-1} y x = z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSlice {
    pub y: Element,
    pub z: Element,
    pub radius: usize,
    pub solutions: FiniteSubset,
}

pub fn conjugate(group: &Group, x: &Element, y: &Element) -> Element {
    group.conjugate(x, y)
}

pub fn class_ball(ex: &Exhaustion, y: &Element, radius: usize) -> Result<ClassBall> {
    let group = ex.group();
    let level = ex.level(radius)?;
    let mut witnesses = BTreeMap::new();
    for x in level.iter() {
        witnesses.entry(group.conjugate(x, y)).or_insert_with(|| x.clone());
    }
    Ok(ClassBall {
        base: y.clone(),
        radius,
        elements: witnesses.keys().cloned().collect(),
        witnesses,
    })
}

pub fn coset_slice(ex: &Exhaustion, y: &Element, z: &Element, radius: usize) -> Result<CosetSlice> {
    let group = ex.group();
    let solutions = ex
        .level(radius)?
        .iter()
        .filter(|x| group.conjugate(x, y) == *z)
        .cloned()
        .collect();
    Ok(CosetSlice {
        y: y.clone(),
        z: z.clone(),
        radius,
        solutions,
    })
}

/// Checks `G_{yz} = G_{yy} x_0` on the slice at `radius`: for a representative
/// `x_0`, every solution `s` has `s x_0^{-1}` in the centralizer slice at
/// radius `radius + 1`, which is where `F_n F_n` lands.
pub fn coset_law_holds(ex: &Exhaustion, slice: &CosetSlice) -> Result<bool> {
    let group = ex.group();
    let Some(x0) = slice.solutions.iter().next() else {
        return Ok(true);
    };
    let centralizer = coset_slice(ex, &slice.y, &slice.y, slice.radius + 1)?;
    let x0_inv = group.inv(x0);
    Ok(slice
        .solutions
        .iter()
        .all(|s| centralizer.solutions.contains(&group.mul(s, &x0_inv))))
}

/// `|class_ball(y, m)|` for `m = 0..=n_max`.
pub fn class_growth(ex: &Exhaustion, y: &Element, n_max: usize) -> Result<Vec<usize>> {
    (0..=n_max).map(|m| Ok(class_ball(ex, y, m)?.len())).collect()
}

/// `max_{y ∈ F_n} |class_ball(y, n)|`, a lower bound for the supremum of
/// class sizes.
pub fn bfc_lower_bound(ex: &Exhaustion, n: usize) -> Result<usize> {
    let group = ex.group();
    let level = ex.level(n)?;
    let mut best = 0;
    for y in level.iter() {
        let class: FiniteSubset = level.iter().map(|x| group.conjugate(x, y)).collect();
        best = best.max(class.len());
    }
    Ok(best)
}
