//! Finite groups given by multiplication tables, and their finitely
//! supported powers indexed by ω.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::perm::FinitePermutation;

/// A finite group presented by its Cayley table over indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub products: Vec<Vec<u16>>,
    pub identity: u16,
    pub inverses: Vec<u16>,
}

impl FiniteGroup {
    /// The symmetric group on `{0,1,2}`, labelled by move lists.
    pub fn s3() -> Self {
        let perms: Vec<FinitePermutation> = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
            .iter()
            .map(|im| FinitePermutation::from_images(im).expect("bijection"))
            .collect();
        let index = |p: &FinitePermutation| perms.iter().position(|q| q == p).expect("closed") as u16;
        let products = perms
            .iter()
            .map(|p| perms.iter().map(|q| index(&p.then(q))).collect())
            .collect();
        let inverses = perms.iter().map(|p| index(&p.inverse())).collect();
        Self {
            elements: perms.iter().map(FinitePermutation::encode).collect(),
            products,
            identity: 0,
            inverses,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let table: FiniteGroup = serde_json::from_str(text).map_err(|e| Error::Parse(format!("group table: {e}")))?;
        table.validate()?;
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.products[a as usize][b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inverses[a as usize]
    }

    pub fn label(&self, a: u16) -> &str {
        &self.elements[a as usize]
    }

    pub fn lookup(&self, label: &str) -> Option<u16> {
        self.elements.iter().position(|l| l == label).map(|i| i as u16)
    }

    /// Checks the table is a group and the labels fit the element encoding.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let bad = |msg: &str| Err(Error::Parse(format!("group table: {msg}")));
        if n == 0 || n > u16::MAX as usize {
            return bad("order out of range");
        }
        if self.products.len() != n || self.products.iter().any(|row| row.len() != n) {
            return bad("products is not a square table");
        }
        if self.inverses.len() != n || self.identity as usize >= n {
            return bad("identity or inverses out of range");
        }
        if self.products.iter().flatten().chain(&self.inverses).any(|&x| x as usize >= n) {
            return bad("entry out of range");
        }
        for (i, label) in self.elements.iter().enumerate() {
            if label.contains(['(', ')', ':']) || self.elements[..i].contains(label) {
                return bad("labels must be distinct and free of '(', ')' and ':'");
            }
        }
        let e = self.identity;
        for a in 0..n as u16 {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return bad("identity law fails");
            }
            if self.mul(a, self.inv(a)) != e {
                return bad("inverse law fails");
            }
            for b in 0..n as u16 {
                for c in 0..n as u16 {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("associativity fails");
                    }
                }
            }
        }
        Ok(())
    }

    /// `a^k` by repeated multiplication.
    pub fn pow(&self, a: u16, k: u64) -> u16 {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// The conjugacy class `{ x^{-1} a x }` of `a`, sorted.
    pub fn class_of(&self, a: u16) -> Vec<u16> {
        let mut class: Vec<u16> = (0..self.order() as u16)
            .map(|x| self.mul(self.mul(self.inv(x), a), x))
            .collect();
        class.sort_unstable();
        class.dedup();
        class
    }
}

/// A finitely supported function `ω → H`, stored as sorted
/// `(coordinate, value)` pairs with non-identity values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reduced {
    entries: Vec<(u32, u16)>,
}

impl Reduced {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds from arbitrary pairs; identity values are dropped.
    pub fn from_entries(table: &FiniteGroup, mut entries: Vec<(u32, u16)>) -> Option<Self> {
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        entries.retain(|&(_, v)| v != table.identity);
        Some(Self { entries })
    }

    pub fn single(table: &FiniteGroup, coordinate: u32, value: u16) -> Self {
        Self::from_entries(table, vec![(coordinate, value)]).expect("one entry")
    }

    pub fn entries(&self) -> &[(u32, u16)] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, table: &FiniteGroup, coordinate: u32) -> u16 {
        match self.entries.binary_search_by_key(&coordinate, |&(i, _)| i) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => table.identity,
        }
    }

    pub fn mul(&self, rhs: &Self, table: &FiniteGroup) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + rhs.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &rhs.entries);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&(ia, va)), Some(&(ib, vb))) if ia == ib => {
                    i += 1;
                    j += 1;
                    (ia, table.mul(va, vb))
                }
                (Some(&(ia, va)), Some(&(ib, _))) if ia < ib => {
                    i += 1;
                    (ia, va)
                }
                (Some(&(ia, va)), None) => {
                    i += 1;
                    (ia, va)
                }
                (_, Some(&(ib, vb))) => {
                    j += 1;
                    (ib, vb)
                }
                (None, None) => unreachable!(),
            };
            if next.1 != table.identity {
                out.push(next);
            }
        }
        Self { entries: out }
    }

    pub fn inverse(&self, table: &FiniteGroup) -> Self {
        Self {
            entries: self.entries.iter().map(|&(i, v)| (i, table.inv(v))).collect(),
        }
    }

    /// Concatenated `(index:label)` blocks; the identity is the empty string.
    pub fn encode(&self, table: &FiniteGroup) -> String {
        self.entries
            .iter()
            .map(|&(i, v)| format!("({i}:{})", table.label(v)))
            .collect()
    }

    pub fn parse(s: &str, table: &FiniteGroup) -> Option<Self> {
        let mut entries = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(')?;
            let end = body.find(')')?;
            let (index, label) = body[..end].split_once(':')?;
            if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) || (index.len() > 1 && index.starts_with('0')) {
                return None;
            }
            let value = table.lookup(label)?;
            if value == table.identity {
                return None;
            }
            entries.push((index.parse().ok()?, value));
            rest = &body[end + 1..];
        }
        if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
            return None;
        }
        Some(Self { entries })
    }
}
