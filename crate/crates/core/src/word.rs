//! Finite words over the two-letter alphabet `{a, b}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the two letters. `A < B` in the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Letter::from_char(c).ok_or(Error::InvalidLetter {
                found: c,
                position: 0,
            }),
            _ => Err(Error::Parse(format!("expected a single letter, got {s:?}"))),
        }
    }
}

/// A finite word. The empty word is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn single(letter: Letter) -> Word {
        Word(vec![letter])
    }

    /// The word of length `len` whose i-th letter is `b` iff bit i of `bits` is set.
    /// Used to walk the whole space `{a,b}^len`.
    pub fn from_bits(bits: u64, len: usize) -> Word {
        debug_assert!(len <= 64);
        Word(
            (0..len)
                .map(|i| if bits >> i & 1 == 1 { Letter::B } else { Letter::A })
                .collect(),
        )
    }

    /// All words of length `len`, in bit order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "word space too large");
        (0..1u64 << len).map(move |bits| Word::from_bits(bits, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.0.get(i).copied()
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    pub fn count(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&l| l == x).count()
    }

    /// The set of distinct factors of length `n`. `{ε}` for `n = 0`.
    pub fn factors_of_length(&self, n: usize) -> BTreeSet<Word> {
        if n > self.len() {
            return BTreeSet::new();
        }
        if n == 0 {
            return BTreeSet::from([Word::empty()]);
        }
        self.0.windows(n).map(|w| Word(w.to_vec())).collect()
    }

    pub fn contains_factor(&self, v: &Word) -> bool {
        v.is_empty() || self.0.windows(v.len()).any(|w| w == v.letters())
    }

    /// Exchanges `a` and `b`.
    pub fn swap_letters(&self) -> Word {
        Word(self.0.iter().map(|l| l.other()).collect())
    }

    /// Contiguous factor `[from, to)`. Panics on out-of-range bounds.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `x · self · y`
    pub fn wrap(&self, x: Letter, y: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.push(x);
        letters.extend_from_slice(&self.0);
        letters.push(y);
        Word(letters)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Balance test: for every length n, the number of `a`s across all
    /// length-n windows varies by at most one.
    pub fn is_balanced(&self) -> bool {
        self.unbalanced_pair().is_none()
    }

    /// Two equal-length factors whose `a`-counts differ by two or more, the
    /// one with more `a`s first. `None` iff the word is balanced.
    pub fn unbalanced_pair(&self) -> Option<(Word, Word)> {
        let n = self.len();
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0usize);
        for &l in &self.0 {
            prefix.push(prefix.last().unwrap() + usize::from(l == Letter::A));
        }
        for len in 1..=n {
            let (mut lo, mut hi) = ((usize::MAX, 0), (0, 0));
            for start in 0..=n - len {
                let c = prefix[start + len] - prefix[start];
                if c < lo.0 {
                    lo = (c, start);
                }
                if c > hi.0 {
                    hi = (c, start);
                }
            }
            if hi.0 >= lo.0 + 2 {
                return Some((
                    self.slice(hi.1, hi.1 + len),
                    self.slice(lo.1, lo.1 + len),
                ));
            }
        }
        None
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                Letter::from_char(c).ok_or(Error::InvalidLetter { found: c, position })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples; panics on letters outside `{a, b}`.
pub fn w(s: &str) -> Word {
    s.parse().expect("word literal over {a,b}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Definition-level oracle: compare every pair of equal-length factors.
    fn balanced_all_pairs(word: &Word) -> bool {
        let n = word.len();
        for len in 1..=n {
            for i in 0..=n - len {
                for j in 0..=n - len {
                    let ci = word.slice(i, i + len).count(Letter::A) as i64;
                    let cj = word.slice(j, j + len).count(Letter::A) as i64;
                    if (ci - cj).abs() > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("aab").reverse(), w("baa"));
        assert_eq!(w("").reverse(), w(""));
        assert_eq!(w("aabab").reverse(), w("babaa"));
    }

    #[test]
    fn palindrome_examples() {
        assert!(w("aba").is_palindrome());
        assert!(!w("ab").is_palindrome());
        assert!(w("").is_palindrome());
    }

    #[test]
    fn count_examples() {
        assert_eq!(w("aabab").count(Letter::A), 3);
        assert_eq!(w("aabab").count(Letter::B), 2);
        assert_eq!(w("").count(Letter::A), 0);
    }

    #[test]
    fn factor_examples() {
        assert_eq!(
            w("aabb").factors_of_length(2),
            BTreeSet::from([w("aa"), w("ab"), w("bb")])
        );
        assert_eq!(w("aba").factors_of_length(3), BTreeSet::from([w("aba")]));
        assert!(w("ab").factors_of_length(5).is_empty());
        assert_eq!(w("ab").factors_of_length(0), BTreeSet::from([w("")]));
        assert!(w("aabab").contains_factor(&w("aba")));
        assert!(!w("aabab").contains_factor(&w("bb")));
        assert!(w("abba").contains_factor(&w("")));
        assert!(w("").contains_factor(&w("")));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(w("aab").swap_letters(), w("bba"));
        assert_eq!(w("").swap_letters(), w(""));
        assert_eq!(w("ab").swap_letters(), w("ba"));
    }

    #[test]
    fn balance_examples() {
        assert!(!w("aabb").is_balanced());
        assert_eq!(w("aabb").unbalanced_pair(), Some((w("aa"), w("bb"))));
        assert!(w("aabaabab").is_balanced());
        assert!(w("abba").is_balanced());
        assert!(w("").is_balanced());
        assert!(balanced_all_pairs(&w("aabaabab")));
        assert!(balanced_all_pairs(&w("abba")));
    }

    #[test]
    fn parse_rejects_other_letters() {
        assert_eq!(
            "abc".parse::<Word>(),
            Err(Error::InvalidLetter {
                found: 'c',
                position: 2
            })
        );
        assert!("".parse::<Word>().unwrap().is_empty());
    }

    #[test]
    fn window_balance_matches_all_pairs_exhaustively() {
        for len in 0..=14 {
            for word in Word::all_of_length(len) {
                assert_eq!(word.is_balanced(), balanced_all_pairs(&word), "{word}");
            }
        }
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..max)
            .prop_map(|bits| bits.into_iter().map(|b| if b { Letter::B } else { Letter::A }).collect())
    }

    proptest! {
        #[test]
        fn reverse_is_involution(word in arb_word(40)) {
            prop_assert_eq!(word.reverse().reverse(), word.clone());
            prop_assert_eq!(word.reverse().count(Letter::A), word.count(Letter::A));
            prop_assert_eq!(word.count(Letter::A) + word.count(Letter::B), word.len());
        }

        #[test]
        fn balance_symmetries(word in arb_word(40)) {
            prop_assert_eq!(word.is_balanced(), word.reverse().is_balanced());
            prop_assert_eq!(word.is_balanced(), word.swap_letters().is_balanced());
            prop_assert_eq!(word.swap_letters().swap_letters(), word.clone());
        }

        #[test]
        fn factors_of_balanced_are_balanced(word in arb_word(40), a in 0usize..40, b in 0usize..40) {
            let (lo, hi) = (a.min(b).min(word.len()), a.max(b).min(word.len()));
            if word.is_balanced() {
                prop_assert!(word.slice(lo, hi).is_balanced());
            }
        }

        #[test]
        fn unbalanced_witness_is_genuine(word in arb_word(30)) {
            if let Some((u, v)) = word.unbalanced_pair() {
                prop_assert_eq!(u.len(), v.len());
                prop_assert!(word.contains_factor(&u) && word.contains_factor(&v));
                prop_assert!(u.count(Letter::A) >= v.count(Letter::A) + 2);
            }
        }
    }
}
