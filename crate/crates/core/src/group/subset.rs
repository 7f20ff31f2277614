use std::collections::HashSet;

use super::element::Element;
use super::handle::Group;

/// Which side a translate multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite set of group elements, kept sorted and duplicate-free so
/// iteration order is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteSubset {
    elements: Vec<Element>,
}

impl FiniteSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(g: Element) -> Self {
        Self { elements: vec![g] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.elements
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.elements.iter().chain(&other.elements).cloned().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        Self {
            elements: small.elements.iter().filter(|g| large.contains(g)).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            elements: self.elements.iter().filter(|g| !other.contains(g)).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.elements.iter().all(|g| other.contains(g))
    }

    /// `{ab | a ∈ self, b ∈ rhs}`.
    pub fn product(&self, group: &Group, rhs: &Self) -> Self {
        let mut seen: HashSet<Element> = HashSet::with_capacity(self.len().max(rhs.len()) * 4);
        for a in &self.elements {
            for b in &rhs.elements {
                seen.insert(group.mul(a, b));
            }
        }
        seen.into_iter().collect()
    }

    /// `{a^{-1} | a ∈ self}`.
    pub fn inverse(&self, group: &Group) -> Self {
        self.elements.iter().map(|a| group.inv(a)).collect()
    }

    /// `xA` for [`Side::Left`], `Ax` for [`Side::Right`].
    pub fn translate(&self, group: &Group, x: &Element, side: Side) -> Self {
        self.elements
            .iter()
            .map(|a| match side {
                Side::Left => group.mul(x, a),
                Side::Right => group.mul(a, x),
            })
            .collect()
    }

    /// `S ∪ S^{-1} ∪ {e}`.
    pub fn symmetrize(&self, group: &Group) -> Self {
        self.union(&self.inverse(group)).union(&Self::singleton(group.identity()))
    }

    pub fn is_symmetric(&self, group: &Group) -> bool {
        self.elements.iter().all(|a| self.contains(&group.inv(a)))
    }

    pub fn encode(&self, group: &Group) -> Vec<String> {
        self.elements.iter().map(|g| group.encode(g)).collect()
    }
}

impl FromIterator<Element> for FiniteSubset {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut elements: Vec<Element> = iter.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Self { elements }
    }
}

impl<'a> IntoIterator for &'a FiniteSubset {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> FiniteSubset {
        v.iter().map(|&n| Element::from(n)).collect()
    }

    #[test]
    fn integer_set_algebra() {
        let g = Group::from_spec_str("int").unwrap();
        assert_eq!(ints(&[0, 1]).product(&g, &ints(&[0, 1])), ints(&[0, 1, 2]));
        assert_eq!(ints(&[1, 2]).inverse(&g), ints(&[-1, -2]));
        assert_eq!(ints(&[0, 1]).translate(&g, &Element::from(5), Side::Right), ints(&[5, 6]));
        assert_eq!(ints(&[3]).symmetrize(&g), ints(&[-3, 0, 3]));
        let a = ints(&[1, 2, 3]);
        let b = ints(&[2, 3, 4]);
        assert_eq!(a.union(&b), ints(&[1, 2, 3, 4]));
        assert_eq!(a.intersection(&b), ints(&[2, 3]));
        assert_eq!(a.difference(&b), ints(&[1]));
        assert!(ints(&[2]).is_subset(&a));
    }

    #[test]
    fn identity_set_is_neutral() {
        let g = Group::from_spec_str("free:2").unwrap();
        let a: FiniteSubset = ["ab", "B", ""].iter().map(|s| g.parse(s).unwrap()).collect();
        let e = FiniteSubset::singleton(g.identity());
        assert_eq!(e.product(&g, &a), a);
        assert_eq!(a.translate(&g, &g.identity(), Side::Left), a);
        assert_eq!(FiniteSubset::singleton(g.identity()).inverse(&g), e);
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(ints(&[1, 1, 2, 1]).len(), 2);
    }
}
