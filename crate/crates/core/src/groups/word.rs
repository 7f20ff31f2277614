//! Reduced words in free groups, stored as syllables `g^k`.

use std::fmt::Write as _;

/// A freely reduced word. Syllables have nonzero exponents and adjacent
/// syllables use different generators, so the representation is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(u32, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn generator(g: u32) -> Word {
        Word {
            syllables: vec![(g, 1)],
        }
    }

    pub fn syllables(&self) -> &[(u32, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length in the standard generators.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|(_, k)| k.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<u32> {
        self.syllables.iter().map(|(g, _)| *g).max()
    }

    /// Builds a word from signed letters (`+(g+1)` for `g`, `-(g+1)` for its inverse).
    pub fn from_letters(letters: &[i32]) -> Word {
        let mut w = Word::identity();
        for &l in letters {
            debug_assert!(l != 0);
            let g = l.unsigned_abs() - 1;
            w.push_syllable(g, l.signum() as i64);
        }
        w
    }

    fn push_syllable(&mut self, g: u32, k: i64) {
        if k == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((lg, lk)) if *lg == g => {
                *lk += k;
                if *lk == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, k)),
        }
    }

    pub fn mul(&self, rhs: &Word) -> Word {
        let mut left = self.syllables.len();
        let mut right = 0;
        // cancel across the seam
        let mut seam: Option<(u32, i64)> = None;
        while left > 0 && right < rhs.syllables.len() {
            let (lg, lk) = self.syllables[left - 1];
            let (rg, rk) = rhs.syllables[right];
            if lg != rg {
                break;
            }
            left -= 1;
            right += 1;
            if lk + rk != 0 {
                seam = Some((lg, lk + rk));
                break;
            }
        }
        let mut syllables = Vec::with_capacity(left + 1 + rhs.syllables.len() - right);
        syllables.extend_from_slice(&self.syllables[..left]);
        if let Some(s) = seam {
            syllables.push(s);
        }
        syllables.extend_from_slice(&rhs.syllables[right..]);
        Word { syllables }
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, k)| (g, -k)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Text form: `a..z` for generators 0..25, `A..Z` for their inverses, and
    /// `{n}` / `{-n}` for generator indices of 26 and above.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        for &(g, k) in &self.syllables {
            for _ in 0..k.unsigned_abs() {
                if g < 26 {
                    let base = if k > 0 { b'a' } else { b'A' };
                    s.push((base + g as u8) as char);
                } else if k > 0 {
                    let _ = write!(s, "{{{g}}}");
                } else {
                    let _ = write!(s, "{{-{g}}}");
                }
            }
        }
        s
    }

    /// Parses the text form; the input must already be freely reduced.
    pub fn parse(s: &str) -> Option<Word> {
        let mut letters = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'a'..=b'z' => letters.push((c - b'a') as i32 + 1),
                b'A'..=b'Z' => letters.push(-((c - b'A') as i32 + 1)),
                b'{' => {
                    let end = s[i..].find('}')? + i;
                    let inner = &s[i + 1..end];
                    let (neg, digits) = match inner.strip_prefix('-') {
                        Some(d) => (true, d),
                        None => (false, inner),
                    };
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return None;
                    }
                    let g: u32 = digits.parse().ok()?;
                    if g < 26 || (digits.len() > 1 && digits.starts_with('0')) {
                        return None;
                    }
                    let l = g as i32 + 1;
                    letters.push(if neg { -l } else { l });
                    i = end;
                }
                _ => return None,
            }
            i += 1;
        }
        if letters.windows(2).any(|w| w[0] == -w[1]) {
            return None;
        }
        Some(Word::from_letters(&letters))
    }

    /// All reduced words of exactly `len` letters over generators `0..rank`,
    /// in lexicographic order with the alphabet `a < A < b < B < ...`.
    pub fn all_of_length(rank: u32, len: usize) -> Vec<Word> {
        let alphabet: Vec<i32> = (0..rank as i32).flat_map(|g| [g + 1, -(g + 1)]).collect();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(len);
        fn rec(alphabet: &[i32], len: usize, stack: &mut Vec<i32>, out: &mut Vec<Word>) {
            if stack.len() == len {
                out.push(Word::from_letters(stack));
                return;
            }
            for &l in alphabet {
                if stack.last() == Some(&-l) {
                    continue;
                }
                stack.push(l);
                rec(alphabet, len, stack, out);
                stack.pop();
            }
        }
        rec(&alphabet, len, &mut stack, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_across_seam() {
        let ab = Word::parse("ab").unwrap();
        let ba_inv = Word::parse("BA").unwrap();
        assert!(ab.mul(&ba_inv).is_identity());
        let aab = Word::parse("aab").unwrap();
        let bb = Word::parse("Bab").unwrap();
        assert_eq!(aab.mul(&bb).encode(), "aaab");
    }

    #[test]
    fn encode_parse() {
        for s in ["", "a", "AbbA", "abAB"] {
            assert_eq!(Word::parse(s).unwrap().encode(), s);
        }
        assert!(Word::parse("aA").is_none());
        assert!(Word::parse("a1").is_none());
        let w = Word::generator(30).mul(&Word::generator(2).inverse());
        assert_eq!(w.encode(), "{30}C");
        assert_eq!(Word::parse("{30}C"), Some(w));
        assert!(Word::parse("{3}").is_none());
    }

    #[test]
    fn powers_stay_compact() {
        let a = Word::generator(0);
        let p = a.pow(4096);
        assert_eq!(p.syllables().len(), 1);
        assert_eq!(p.len(), 4096);
        assert!(p.mul(&a.pow(-4096)).is_identity());
    }

    #[test]
    fn length_counts() {
        assert_eq!(Word::all_of_length(2, 1).len(), 4);
        assert_eq!(Word::all_of_length(2, 3).len(), 36);
        let first: Vec<String> = Word::all_of_length(2, 2).iter().take(3).map(|w| w.encode()).collect();
        assert_eq!(first, ["aa", "ab", "aB"]);
    }
}
