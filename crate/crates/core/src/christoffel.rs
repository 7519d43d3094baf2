//! Christoffel words from lattice paths under a segment, and central words.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Enumeration bound for [`enumerate_central`] unless overridden.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// A coprime pair `(p, q)`: `p` horizontal steps (`a`), `q` vertical steps (`b`).
/// The segment from `(0,0)` to `(p,q)` has slope `q/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    p: u64,
    q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroSlope);
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NonCoprime { p, q, gcd });
        }
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        (self.p + self.q) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    pub fn letter(self) -> Letter {
        match self {
            Step::Right => Letter::A,
            Step::Up => Letter::B,
        }
    }

    pub fn from_letter(l: Letter) -> Step {
        match l {
            Letter::A => Step::Right,
            Letter::B => Step::Up,
        }
    }

    fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Up => (0, 1),
        }
    }
}

/// A path of unit steps in the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (i64, i64), steps: Vec<Step>) -> LatticePath {
        LatticePath { start, steps }
    }

    /// Path starting at `start` whose steps spell `word`.
    pub fn from_word(start: (i64, i64), word: &Word) -> LatticePath {
        LatticePath::new(start, word.letters().iter().map(|&l| Step::from_letter(l)).collect())
    }

    /// All vertices, `start` first.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start;
        pts.push(cur);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            cur = (cur.0 + dx, cur.1 + dy);
            pts.push(cur);
        }
        pts
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().unwrap()
    }

    pub fn word(&self) -> Word {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// The same path traversed with every step negated, i.e. walking from
    /// `start` backwards through `word` read right to left.
    pub fn backwards_from(start: (i64, i64), word_leftward: &Word) -> Vec<(i64, i64)> {
        let mut pts = vec![start];
        let mut cur = start;
        for &l in word_leftward.letters() {
            let (dx, dy) = Step::from_letter(l).delta();
            cur = (cur.0 - dx, cur.1 - dy);
            pts.push(cur);
        }
        pts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Lower,
    Upper,
}

/// Lower Christoffel word of slope `q/p`.
///
/// Letter `i` (1-based) is `a` iff `i·q mod (p+q) > (i-1)·q mod (p+q)`.
pub fn lower_christoffel(s: Slope) -> Word {
    if s.q == 0 {
        return Word::single(Letter::A);
    }
    let n = s.p + s.q;
    (1..=n)
        .map(|i| {
            if (i * s.q) % n > ((i - 1) * s.q) % n {
                Letter::A
            } else {
                Letter::B
            }
        })
        .collect()
}

/// Upper Christoffel word of slope `q/p`: letter `i` (0-based) is `b` iff
/// `⌈(i+1)q/(p+q)⌉ > ⌈iq/(p+q)⌉`.
pub fn upper_christoffel(s: Slope) -> Word {
    let n = s.p + s.q;
    let ceil = |i: u64| (i * s.q).div_ceil(n);
    (0..n)
        .map(|i| if ceil(i + 1) > ceil(i) { Letter::B } else { Letter::A })
        .collect()
}

/// The staircase path from `(0,0)` to `(p,q)` hugging the segment from below
/// (taking an up step whenever it stays weakly under the segment) or from
/// above (taking a right step whenever it stays weakly over it).
pub fn christoffel_path(s: Slope, which: Which) -> LatticePath {
    let (p, q) = (s.p as i64, s.q as i64);
    let (mut x, mut y) = (0i64, 0i64);
    let mut steps = Vec::with_capacity(s.len());
    while (x, y) != (p, q) {
        let step = match which {
            Which::Lower => {
                if y < q && (y + 1) * p <= x * q {
                    Step::Up
                } else if x < p {
                    Step::Right
                } else {
                    Step::Up
                }
            }
            Which::Upper => {
                if x < p && y * p >= (x + 1) * q {
                    Step::Right
                } else if y < q {
                    Step::Up
                } else {
                    Step::Right
                }
            }
        };
        let (dx, dy) = step.delta();
        x += dx;
        y += dy;
        steps.push(step);
    }
    LatticePath::new((0, 0), steps)
}

/// Lower Christoffel word with its first and last letters removed.
pub fn central_of(s: Slope) -> Result<Word> {
    if s.p == 0 || s.q == 0 {
        return Err(Error::DegenerateSlope { p: s.p, q: s.q });
    }
    let lower = lower_christoffel(s);
    Ok(lower.slice(1, lower.len() - 1))
}

/// `w` is central iff `a·w·b` and `b·w·a` are both balanced.
pub fn is_central(w: &Word) -> bool {
    w.wrap(Letter::A, Letter::B).is_balanced() && w.wrap(Letter::B, Letter::A).is_balanced()
}

/// Recognizes lower and upper Christoffel words, including the trivial `a` and `b`.
pub fn is_christoffel(w: &Word) -> bool {
    match w.len() {
        0 => false,
        1 => true,
        n => {
            let (first, last) = (w.get(0).unwrap(), w.get(n - 1).unwrap());
            first != last && is_central(&w.slice(1, n - 1))
        }
    }
}

/// Slope of a Christoffel word, by counting letters.
pub fn slope_of(w: &Word) -> Option<Slope> {
    if !is_christoffel(w) {
        return None;
    }
    Slope::new(w.count(Letter::A) as u64, w.count(Letter::B) as u64).ok()
}

/// All central words of length `n` (`n ≤ DEFAULT_ENUMERATION_BOUND`).
pub fn enumerate_central(n: usize) -> Result<BTreeSet<Word>> {
    enumerate_central_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_central_bounded(n: usize, bound: usize) -> Result<BTreeSet<Word>> {
    if n > bound || n >= 63 {
        return Err(Error::BoundExceeded {
            requested: n,
            bound: bound.min(62),
        });
    }
    Ok(Word::all_of_length(n).filter(is_central).collect())
}

/// Euler's totient via trial-division factorization.
pub fn totient(n: u64) -> u64 {
    let (mut n, mut result) = (n, n);
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
