//! The action of a group on a finite conjugacy class, its kernel on a level,
//! and the power-commutation test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::conjugacy::class_ball;
use crate::error::{Error, Result};
use crate::group::{Element, Exhaustion, FiniteSubset, Group, GroupSpec, Side};
use crate::groups::FinitePermutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizationData {
    pub y: Element,
    pub radius: usize,
    /// The class of `y`, stable from `radius` to `radius + 1`.
    pub class: FiniteSubset,
    /// `|class|!`, when it fits in 64 bits.
    pub class_exponent: Option<u64>,
    /// `|H|` for a reduced power of `H`.
    pub group_exponent: Option<u64>,
}

impl SymmetrizationData {
    /// The exponent used for certificates: `|H|` when known, else `|class|!`.
    pub fn exponent(&self) -> Option<u64> {
        self.group_exponent.or(self.class_exponent)
    }

    /// `z ↦ x^{-1} z x` as a permutation of class positions.
    pub fn alpha(&self, group: &Group, x: &Element) -> Result<FinitePermutation> {
        let images = self
            .class
            .iter()
            .map(|z| {
                let image = group.conjugate(x, z);
                self.class
                    .as_slice()
                    .binary_search(&image)
                    .map(|p| p as u32)
                    .map_err(|_| Error::Precondition(format!("{} leaves the recorded class", group.encode(&image))))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(FinitePermutation::from_images(&images).expect("conjugation permutes the class"))
    }

    /// `E = {x ∈ F_radius : alpha(x) = id}`.
    pub fn kernel(&self, ex: &Exhaustion) -> Result<FiniteSubset> {
        let group = ex.group();
        let mut out = Vec::new();
        for x in ex.level(self.radius)?.iter() {
            if self.alpha(group, x)?.is_identity() {
                out.push(x.clone());
            }
        }
        Ok(out.into_iter().collect())
    }
}

pub fn permutation_pow(p: &FinitePermutation, n: u64) -> FinitePermutation {
    let (mut acc, mut base, mut n) = (FinitePermutation::identity(), p.clone(), n);
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.then(&base);
        }
        base = base.then(&base);
        n >>= 1;
    }
    acc
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Requires the class ball of `y` to be the same at `radius` and `radius + 1`.
pub fn symmetrize(ex: &Exhaustion, y: &Element, radius: usize) -> Result<SymmetrizationData> {
    let inner = class_ball(ex, y, radius)?;
    let outer = class_ball(ex, y, radius + 1)?;
    if inner.elements != outer.elements {
        return Err(Error::Precondition(format!(
            "class of {} grows from {} to {} between radius {radius} and {}",
            ex.group().encode(y),
            inner.len(),
            outer.len(),
            radius + 1
        )));
    }
    let group_exponent = match ex.group().spec() {
        GroupSpec::ReducedPower { table, .. } => Some(table.order() as u64),
        _ => None,
    };
    Ok(SymmetrizationData {
        y: y.clone(),
        radius,
        class_exponent: factorial(inner.len()),
        class: inner.elements,
        group_exponent,
    })
}

/// `E ∩ y^{-1} A = E ∩ A y^{-1}`.
pub fn e_set_commutation(ex: &Exhaustion, data: &SymmetrizationData, a: &FiniteSubset) -> Result<bool> {
    let group = ex.group();
    let e = data.kernel(ex)?;
    let y_inv = group.inv(&data.y);
    let left = a.translate(group, &y_inv, Side::Left);
    let right = a.translate(group, &y_inv, Side::Right);
    Ok(e.intersection(&left) == e.intersection(&right))
}

/// Whether `x^n y = y x^n`, and for reduced powers also `x^n = e`.
pub fn power_commute_pair(group: &Group, n: u64, x: &Element, y: &Element) -> bool {
    let xn = group.pow(x, n as i64);
    let finite_exponent = !matches!(group.spec(), GroupSpec::ReducedPower { .. }) || group.is_identity(&xn);
    finite_exponent && group.mul(&xn, y) == group.mul(y, &xn)
}

/// Tests [`power_commute_pair`] on `samples` seeded random pairs; returns the
/// first failing pair.
pub fn power_commute_check(group: &Group, n: u64, samples: usize, seed: u64) -> Option<(Element, Element)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).find_map(|_| {
        let x = group.random(&mut rng, 4);
        let y = group.random(&mut rng, 4);
        (!power_commute_pair(group, n, &x, &y)).then_some((x, y))
    })
}
