use std::sync::{Arc, RwLock};

use rand::seq::SliceRandom;
use rand::Rng;

use super::element::Element;
use super::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::groups::{Affine, FiniteGroup, FinitePermutation, Reduced, Triple, Word};
use crate::num::{Dyadic, Integer, Ring};

/// A concrete countable group with exact arithmetic and a fixed total
/// enumeration `g_0 = e, g_1, ...`.
#[derive(Debug)]
pub struct Group {
    spec: GroupSpec,
    enumeration: RwLock<EnumerationCache>,
}

#[derive(Debug, Default)]
struct EnumerationCache {
    elements: Vec<Element>,
    shells_done: u64,
}

fn zigzag(k: i64) -> u64 {
    if k > 0 {
        2 * k as u64 - 1
    } else {
        2 * k.unsigned_abs()
    }
}

impl Group {
    pub fn new(spec: GroupSpec) -> Arc<Group> {
        Arc::new(Group {
            spec,
            enumeration: RwLock::new(EnumerationCache::default()),
        })
    }

    pub fn from_spec_str(s: &str) -> Result<Arc<Group>> {
        Ok(Group::new(s.parse()?))
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// The string this group was parsed from.
    pub fn id(&self) -> String {
        self.spec.to_string()
    }

    fn table(&self) -> &FiniteGroup {
        match &self.spec {
            GroupSpec::ReducedPower { table, .. } => table,
            _ => unreachable!("only reduced powers carry a table"),
        }
    }

    /// The base table of a reduced power.
    pub fn base_table(&self) -> Option<&FiniteGroup> {
        match &self.spec {
            GroupSpec::ReducedPower { table, .. } => Some(table),
            _ => None,
        }
    }

    pub fn identity(&self) -> Element {
        match &self.spec {
            GroupSpec::Integers => Element::Int(Integer::ZERO),
            GroupSpec::IntegersSquared => Element::Int2(Integer::ZERO, Integer::ZERO),
            GroupSpec::Free { .. } => Element::Word(Word::identity()),
            GroupSpec::FinSym => Element::Perm(FinitePermutation::identity()),
            GroupSpec::AffineDyadic => Element::Affine(Affine::identity()),
            GroupSpec::HeisInt => Element::HeisInt(Triple::identity()),
            GroupSpec::HeisDyadic => Element::HeisDyadic(Triple::identity()),
            GroupSpec::ReducedPower { .. } => Element::Reduced(Reduced::identity()),
        }
    }

    /// Whether `g` is an element of this group.
    pub fn contains(&self, g: &Element) -> bool {
        match (&self.spec, g) {
            (GroupSpec::Integers, Element::Int(_))
            | (GroupSpec::IntegersSquared, Element::Int2(..))
            | (GroupSpec::FinSym, Element::Perm(_))
            | (GroupSpec::AffineDyadic, Element::Affine(_))
            | (GroupSpec::HeisInt, Element::HeisInt(_))
            | (GroupSpec::HeisDyadic, Element::HeisDyadic(_)) => true,
            (GroupSpec::Free { rank }, Element::Word(w)) => match (rank, w.max_generator()) {
                (Some(r), Some(g)) => g < *r,
                _ => true,
            },
            (GroupSpec::ReducedPower { table, .. }, Element::Reduced(x)) => {
                x.entries().iter().all(|&(_, v)| (v as usize) < table.order())
            }
            _ => false,
        }
    }

    fn check(&self, g: &Element) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::Usage(format!("element of {} used in {}", g.family(), self.id())))
        }
    }

    /// `gh`, or a usage error when an operand belongs to another group.
    pub fn try_mul(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    /// `gh`. Operands must belong to this group; see [`Group::try_mul`].
    pub fn mul(&self, g: &Element, h: &Element) -> Element {
        match (g, h) {
            (Element::Int(a), Element::Int(b)) => Element::Int(a + b),
            (Element::Int2(a, b), Element::Int2(c, d)) => Element::Int2(a + c, b + d),
            (Element::Word(a), Element::Word(b)) => Element::Word(a.mul(b)),
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(a.then(b)),
            (Element::Affine(a), Element::Affine(b)) => Element::Affine(a.mul(b)),
            (Element::HeisInt(a), Element::HeisInt(b)) => Element::HeisInt(a.mul(b)),
            (Element::HeisDyadic(a), Element::HeisDyadic(b)) => Element::HeisDyadic(a.mul(b)),
            (Element::Reduced(a), Element::Reduced(b)) => Element::Reduced(a.mul(b, self.table())),
            _ => panic!("mixed-group operands: {} and {}", g.family(), h.family()),
        }
    }

    pub fn inv(&self, g: &Element) -> Element {
        match g {
            Element::Int(a) => Element::Int(-a),
            Element::Int2(a, b) => Element::Int2(-a, -b),
            Element::Word(w) => Element::Word(w.inverse()),
            Element::Perm(p) => Element::Perm(p.inverse()),
            Element::Affine(a) => Element::Affine(a.inverse()),
            Element::HeisInt(t) => Element::HeisInt(t.inverse()),
            Element::HeisDyadic(t) => Element::HeisDyadic(t.inverse()),
            Element::Reduced(r) => Element::Reduced(r.inverse(self.table())),
        }
    }

    pub fn mul3(&self, a: &Element, b: &Element, c: &Element) -> Element {
        self.mul(&self.mul(a, b), c)
    }

    /// `x^{-1} y x`.
    pub fn conjugate(&self, x: &Element, y: &Element) -> Element {
        self.mul3(&self.inv(x), y, x)
    }

    /// `g^n` for any integer `n`, by square-and-multiply.
    pub fn pow(&self, g: &Element, n: i64) -> Element {
        let mut base = if n < 0 { self.inv(g) } else { g.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_identity(&self, g: &Element) -> bool {
        *g == self.identity()
    }

    /// Membership in the center, in closed form.
    pub fn is_central(&self, g: &Element) -> bool {
        match g {
            Element::Int(_) | Element::Int2(..) => true,
            Element::HeisInt(t) => t.is_central(),
            Element::HeisDyadic(t) => t.is_central(),
            Element::Reduced(r) => {
                let h = self.table();
                r.entries()
                    .iter()
                    .all(|&(_, v)| (0..h.order() as u16).all(|w| h.mul(v, w) == h.mul(w, v)))
            }
            _ => self.is_identity(g),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match &self.spec {
            GroupSpec::Integers | GroupSpec::IntegersSquared => true,
            GroupSpec::ReducedPower { table, .. } => {
                let n = table.order() as u16;
                (0..n).all(|a| (0..n).all(|b| table.mul(a, b) == table.mul(b, a)))
            }
            _ => false,
        }
    }

    pub fn encode(&self, g: &Element) -> String {
        match g {
            Element::Int(a) => a.to_string(),
            Element::Int2(a, b) => format!("({a},{b})"),
            Element::Word(w) => w.encode(),
            Element::Perm(p) => p.encode(),
            Element::Affine(a) => a.encode(),
            Element::HeisInt(t) => t.encode(),
            Element::HeisDyadic(t) => t.encode(),
            Element::Reduced(r) => r.encode(self.table()),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        let parsed = match &self.spec {
            GroupSpec::Integers => s.parse().ok().map(Element::Int),
            GroupSpec::IntegersSquared => s
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .and_then(|t| t.split_once(','))
                .and_then(|(a, b)| Some(Element::Int2(a.parse().ok()?, b.parse().ok()?))),
            GroupSpec::Free { .. } => Word::parse(s).map(Element::Word),
            GroupSpec::FinSym => FinitePermutation::parse(s).map(Element::Perm),
            GroupSpec::AffineDyadic => Affine::parse(s).map(Element::Affine),
            GroupSpec::HeisInt => Triple::parse(s).map(Element::HeisInt),
            GroupSpec::HeisDyadic => Triple::parse(s).map(Element::HeisDyadic),
            GroupSpec::ReducedPower { table, .. } => Reduced::parse(s, table).map(Element::Reduced),
        };
        match parsed {
            Some(g) if self.contains(&g) => Ok(g),
            _ => Err(Error::Parse(format!("{s:?} is not a canonical element of {}", self.id()))),
        }
    }

    /// Shell `s` of the enumeration: the elements of height exactly `s`, in
    /// their fixed order. Shell 0 is `{e}`.
    pub fn shell(&self, s: u64) -> Vec<Element> {
        if s == 0 {
            return vec![self.identity()];
        }
        match &self.spec {
            GroupSpec::Integers => {
                let s = s as i64;
                vec![Element::from(s), Element::from(-s)]
            }
            GroupSpec::IntegersSquared => {
                let coords = Integer::up_to_height(s);
                let mut out = Vec::new();
                for b in &coords {
                    for a in &coords {
                        if a.abs().max(b.abs()) == Integer::from(s as i64) {
                            out.push(Element::Int2(a.clone(), b.clone()));
                        }
                    }
                }
                out
            }
            GroupSpec::Free { rank: Some(r) } => Word::all_of_length(*r, s as usize)
                .into_iter()
                .map(Element::Word)
                .collect(),
            GroupSpec::Free { rank: None } => {
                let rank = s as u32;
                let mut out = Vec::new();
                for len in 1..=s as usize {
                    for w in Word::all_of_length(rank, len) {
                        if len == s as usize || w.max_generator() == Some(rank - 1) {
                            out.push(Element::Word(w));
                        }
                    }
                }
                out
            }
            GroupSpec::FinSym => FinitePermutation::with_max_moved(s as u32)
                .into_iter()
                .map(Element::Perm)
                .collect(),
            GroupSpec::AffineDyadic => {
                let shifts = Dyadic::up_to_height(s);
                let h = Integer::from(s as i64);
                let mut scales: Vec<i64> = (-(s as i64)..=s as i64).collect();
                scales.sort_by_key(|&k| zigzag(k));
                let mut out = Vec::new();
                for r in &shifts {
                    for &k in &scales {
                        if r.height() == h || k.unsigned_abs() == s {
                            out.push(Element::Affine(Affine::new(k, r.clone())));
                        }
                    }
                }
                out
            }
            GroupSpec::HeisInt => triples_of_height::<Integer>(s).into_iter().map(Element::HeisInt).collect(),
            GroupSpec::HeisDyadic => triples_of_height::<Dyadic>(s).into_iter().map(Element::HeisDyadic).collect(),
            GroupSpec::ReducedPower { table, .. } => {
                let n = table.order() as u64;
                let values: Vec<u16> = (0..n as u16).collect();
                let top = s as u32 - 1;
                let mut out = Vec::new();
                for &v in values.iter().filter(|&&v| v != table.identity) {
                    // coordinates 0..top as a mixed-radix counter, coordinate 0 least significant
                    for code in 0..n.pow(top) {
                        let mut entries = vec![(top, v)];
                        let mut c = code;
                        for i in 0..top {
                            entries.push((i, (c % n) as u16));
                            c /= n;
                        }
                        out.push(Element::Reduced(Reduced::from_entries(table, entries).expect("distinct coordinates")));
                    }
                }
                out
            }
        }
    }

    /// `g_k` in the fixed enumeration; injective in `k`, `g_0 = e`.
    pub fn enumerate(&self, k: usize) -> Element {
        {
            let cache = self.enumeration.read().expect("enumeration lock");
            if let Some(g) = cache.elements.get(k) {
                return g.clone();
            }
        }
        let mut cache = self.enumeration.write().expect("enumeration lock");
        while cache.elements.len() <= k {
            let s = cache.shells_done;
            let shell = self.shell(s);
            cache.elements.extend(shell);
            cache.shells_done += 1;
        }
        cache.elements[k].clone()
    }

    /// `g_0, ..., g_{n-1}`.
    pub fn enumerate_prefix(&self, n: usize) -> Vec<Element> {
        if n == 0 {
            return Vec::new();
        }
        self.enumerate(n - 1);
        let cache = self.enumeration.read().expect("enumeration lock");
        cache.elements[..n].to_vec()
    }

    /// A pseudo-random element whose size grows with `scale`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, scale: u32) -> Element {
        let scale = scale.max(1);
        let int = |rng: &mut R| Integer::from(rng.gen_range(-(scale as i64)..=scale as i64));
        let dyadic = |rng: &mut R| Dyadic::new(int(rng), rng.gen_range(0..=scale as u64));
        match &self.spec {
            GroupSpec::Integers => Element::Int(int(rng)),
            GroupSpec::IntegersSquared => Element::Int2(int(rng), int(rng)),
            GroupSpec::Free { rank } => {
                let r = rank.unwrap_or(30) as i32;
                let len = rng.gen_range(0..=scale as usize);
                let letters: Vec<i32> = (0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..=r);
                        if rng.gen_bool(0.5) {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect();
                Element::Word(Word::from_letters(&letters))
            }
            GroupSpec::FinSym => {
                let n = rng.gen_range(1..=scale as usize + 1);
                let mut images: Vec<u32> = (0..n as u32).collect();
                images.shuffle(rng);
                Element::Perm(FinitePermutation::from_images(&images).expect("shuffle is a bijection"))
            }
            GroupSpec::AffineDyadic => Element::Affine(Affine::new(
                rng.gen_range(-(scale as i64)..=scale as i64),
                dyadic(rng),
            )),
            GroupSpec::HeisInt => Element::HeisInt(Triple::new(int(rng), int(rng), int(rng))),
            GroupSpec::HeisDyadic => Element::HeisDyadic(Triple::new(dyadic(rng), dyadic(rng), dyadic(rng))),
            GroupSpec::ReducedPower { table, .. } => {
                let mut coords: Vec<u32> = (0..scale + 2).collect();
                coords.shuffle(rng);
                let k = rng.gen_range(0..=coords.len().min(4));
                let entries = coords[..k]
                    .iter()
                    .map(|&i| (i, rng.gen_range(0..table.order() as u16)))
                    .collect();
                Element::Reduced(Reduced::from_entries(table, entries).expect("distinct coordinates"))
            }
        }
    }
}

/// Triples over `R` whose largest coordinate height is exactly `s`, ordered
/// colexicographically by each coordinate's position in the ring order.
fn triples_of_height<R: Ring>(s: u64) -> Vec<Triple<R>> {
    let coords = R::up_to_height(s);
    let h = Integer::from(s as i64);
    let top: Vec<bool> = coords.iter().map(|x| x.height() == h).collect();
    let mut out = Vec::new();
    for (k, c) in coords.iter().enumerate() {
        for (j, b) in coords.iter().enumerate() {
            for (i, a) in coords.iter().enumerate() {
                if top[i] || top[j] || top[k] {
                    out.push(Triple::new(a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}
