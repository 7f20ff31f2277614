//! Finitely supported permutations of the natural numbers.

use std::collections::BTreeSet;

/// A permutation of ω moving finitely many points, stored as its sorted
/// list of non-fixed points `i -> σ(i)`.
///
/// Products are read left to right: in `σ·τ` the permutation `σ` acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePermutation {
    moves: Vec<(u32, u32)>,
}

impl FinitePermutation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn transposition(a: u32, b: u32) -> Self {
        if a == b {
            return Self::identity();
        }
        let (a, b) = (a.min(b), a.max(b));
        Self {
            moves: vec![(a, b), (b, a)],
        }
    }

    /// From an image vector on `0..images.len()`; `None` unless it is a bijection.
    pub fn from_images(images: &[u32]) -> Option<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &i in images {
            if i >= n || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Self {
            moves: images
                .iter()
                .enumerate()
                .filter(|(i, &j)| *i as u32 != j)
                .map(|(i, &j)| (i as u32, j))
                .collect(),
        })
    }

    pub fn moves(&self) -> &[(u32, u32)] {
        &self.moves
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self.moves.binary_search_by_key(&i, |&(a, _)| a) {
            Ok(pos) => self.moves[pos].1,
            Err(_) => i,
        }
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.moves.iter().map(|&(a, _)| a)
    }

    pub fn max_moved(&self) -> Option<u32> {
        self.moves.last().map(|&(a, _)| a)
    }

    pub fn is_identity(&self) -> bool {
        self.moves.is_empty()
    }

    /// `self · rhs`: apply `self`, then `rhs`.
    pub fn then(&self, rhs: &Self) -> Self {
        let domain: BTreeSet<u32> = self.support().chain(rhs.support()).collect();
        let moves = domain
            .into_iter()
            .filter_map(|i| {
                let j = rhs.apply(self.apply(i));
                (i != j).then_some((i, j))
            })
            .collect();
        Self { moves }
    }

    pub fn inverse(&self) -> Self {
        let mut moves: Vec<(u32, u32)> = self.moves.iter().map(|&(a, b)| (b, a)).collect();
        moves.sort_unstable();
        Self { moves }
    }

    /// Decomposes into adjacent transpositions `(i i+1)`, returned as the list
    /// of `i` whose left-to-right product is `self`. The list has minimal
    /// length, namely the inversion count.
    pub fn adjacent_word(&self) -> Vec<u32> {
        let n = match self.max_moved() {
            Some(m) => m as usize + 1,
            None => return Vec::new(),
        };
        // bubble-sort the image vector; swapping positions (i, i+1)
        // left-multiplies by the transposition (i i+1)
        let mut images: Vec<u32> = (0..n as u32).map(|i| self.apply(i)).collect();
        let mut swaps = Vec::new();
        loop {
            let mut changed = false;
            for i in 0..n - 1 {
                if images[i] > images[i + 1] {
                    images.swap(i, i + 1);
                    swaps.push(i as u32);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        swaps
    }

    /// `"0>1,1>0"`; the identity is the empty string.
    pub fn encode(&self) -> String {
        self.moves
            .iter()
            .map(|(a, b)| format!("{a}>{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Option<Self> {
        if s.is_empty() {
            return Some(Self::identity());
        }
        let mut moves = Vec::new();
        for part in s.split(',') {
            let (a, b) = part.split_once('>')?;
            let a = parse_index(a)?;
            let b = parse_index(b)?;
            if a == b {
                return None;
            }
            moves.push((a, b));
        }
        if moves.windows(2).any(|w| w[0].0 >= w[1].0) {
            return None;
        }
        let mut targets: Vec<u32> = moves.iter().map(|&(_, b)| b).collect();
        targets.sort_unstable();
        let sources: Vec<u32> = moves.iter().map(|&(a, _)| a).collect();
        if targets != sources {
            return None;
        }
        Some(Self { moves })
    }

    /// Every permutation whose largest moved point is exactly `m`, ordered by
    /// image vector on `0..=m`.
    pub fn with_max_moved(m: u32) -> Vec<Self> {
        let n = m as usize + 1;
        let mut out = Vec::new();
        let mut current: Vec<u32> = (0..n as u32).collect();
        loop {
            if current[n - 1] != m {
                out.push(Self::from_images(&current).expect("bijection"));
            }
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> FinitePermutation {
        FinitePermutation::parse(s).unwrap()
    }

    #[test]
    fn left_to_right_product() {
        // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1
        let x = p("0>1,1>0").then(&p("1>2,2>1"));
        assert_eq!(x.encode(), "0>2,1>0,2>1");
        assert!(x.then(&x.inverse()).is_identity());
    }

    #[test]
    fn parse_rejects_malformed() {
        for s in ["0>0", "1>0,0>1", "0>1", "0>1,1>2", "a>b", "01>1,1>01"] {
            assert!(FinitePermutation::parse(s).is_none(), "{s}");
        }
    }

    #[test]
    fn shells_have_expected_sizes() {
        assert_eq!(FinitePermutation::with_max_moved(1).len(), 1);
        assert_eq!(FinitePermutation::with_max_moved(2).len(), 4);
        assert_eq!(FinitePermutation::with_max_moved(3).len(), 18);
        assert_eq!(FinitePermutation::with_max_moved(2)[0], p("1>2,2>1"));
    }

    #[test]
    fn adjacent_word_multiplies_back() {
        let x = p("0>3,1>0,3>1");
        let word = x.adjacent_word();
        let back = word
            .iter()
            .fold(FinitePermutation::identity(), |acc, &i| acc.then(&FinitePermutation::transposition(i, i + 1)));
        assert_eq!(back, x);
    }
}
