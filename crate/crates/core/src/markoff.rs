//! The Markoff condition.
//!
//! At a cut `s = ũ·x·y·v` (`x ≠ y`, `x` at index `j`) the condition asks for
//! either `u = v` or `u = m·y·…`, `v = m·x·…` for a common prefix `m`. The
//! scan compares `s[j-k]` with `s[j+1+k]` for `k = 1, 2, …`. A bi-infinite
//! word fails the condition exactly when it contains a factor `x·m̃·x·y·m·y`
//! with `x ≠ y`; [`forbidden_factor_scan`] searches for that pattern
//! directly and is kept separate from the cut scan so each checks the other.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::biinfinite::{BiInfiniteWord, RightInfinite};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Outcome of scanning one cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict3 {
    Holds,
    FailsAt { cut_index: i64, witness_m: Word },
    Inconclusive { cut_index: i64 },
}

impl Verdict3 {
    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict3::FailsAt { .. })
    }
}

/// JSON shape of a verdict: `{verdict, cut_index, witness_m, evidence[]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub verdict: String,
    pub cut_index: Option<i64>,
    pub witness_m: Option<Word>,
    pub evidence: Vec<String>,
}

impl VerdictReport {
    pub fn new(v: &Verdict3, evidence: Vec<String>) -> VerdictReport {
        let (verdict, cut_index, witness_m) = match v {
            Verdict3::Holds => ("holds", None, None),
            Verdict3::FailsAt {
                cut_index,
                witness_m,
            } => ("fails", Some(*cut_index), Some(witness_m.clone())),
            Verdict3::Inconclusive { cut_index } => ("inconclusive", Some(*cut_index), None),
        };
        VerdictReport {
            verdict: verdict.into(),
            cut_index,
            witness_m,
            evidence,
        }
    }
}

/// Finer-grained result of a cut scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CutScan {
    /// First disagreement at `k` has the allowed orientation.
    Allowed { k: usize },
    /// First disagreement at `k` has the forbidden orientation; `m` is the common prefix.
    Forbidden { m: Word },
    /// `u = v`, certified by the representation.
    Mirror,
    /// No disagreement up to the radius and nothing certifies equality beyond.
    Undecided,
}

/// Generic cut scan. `letter(i)` returns `None` past the end of a finite
/// word; `certified(k)` says whether agreement on `1..=k` proves `u = v`.
pub(crate) fn scan_cut(
    letter: impl Fn(i64) -> Result<Option<Letter>>,
    certified: impl Fn(usize) -> bool,
    j: i64,
    max_radius: usize,
) -> Result<CutScan> {
    let (x, y) = match (letter(j)?, letter(j + 1)?) {
        (Some(x), Some(y)) if x != y => (x, y),
        _ => return Err(Error::NoCutAt { index: j }),
    };
    let mut m = Vec::new();
    for k in 1..=max_radius {
        let (left, right) = match (letter(j - k as i64)?, letter(j + 1 + k as i64)?) {
            (Some(l), Some(r)) => (l, r),
            _ => return Ok(CutScan::Undecided),
        };
        if left == right {
            m.push(right);
            if certified(k) {
                return Ok(CutScan::Mirror);
            }
            continue;
        }
        return Ok(if left == y && right == x {
            CutScan::Allowed { k }
        } else {
            CutScan::Forbidden { m: Word::new(m) }
        });
    }
    Ok(CutScan::Undecided)
}

fn to_verdict(scan: CutScan, j: i64) -> Verdict3 {
    match scan {
        CutScan::Allowed { .. } | CutScan::Mirror => Verdict3::Holds,
        CutScan::Forbidden { m } => Verdict3::FailsAt {
            cut_index: j,
            witness_m: m,
        },
        CutScan::Undecided => Verdict3::Inconclusive { cut_index: j },
    }
}

/// How far an agreement run must go before the representation guarantees
/// the two sides agree forever. Never certifies when the representation
/// gives no finite criterion.
fn certifier(s: &BiInfiniteWord, j: i64) -> Box<dyn Fn(usize) -> bool + '_> {
    match s {
        BiInfiniteWord::Periodic { period, .. } => {
            let p = period.len();
            Box::new(move |k| k >= p)
        }
        BiInfiniteWord::DoublyEventuallyPeriodic {
            left,
            center,
            right,
        } => {
            let c = center.len() as i64;
            let lcm = left.len().lcm(&right.len());
            // smallest k with j-k ≤ -1 and j+1+k ≥ c
            let k0 = (j + 1).max(c - j - 1).max(1) as usize;
            Box::new(move |k| k >= k0 && k + 1 - k0 >= lcm)
        }
        BiInfiniteWord::Spliced {
            source: RightInfinite::Periodic(_),
            ..
        } => unreachable!("normalized before scanning"),
        BiInfiniteWord::Spliced { .. } => Box::new(move |_| j == 0),
        BiInfiniteWord::LineCut { line, .. } => {
            let mirror = line.intercept.is_integer() && j == -1;
            Box::new(move |_| mirror)
        }
    }
}

pub(crate) fn scan_biinfinite(s: &BiInfiniteWord, j: i64, max_radius: usize) -> Result<CutScan> {
    let s = s.normalized();
    let cert = certifier(&s, j);
    scan_cut(|i| s.letter_at(i).map(Some), cert, j, max_radius)
}

/// Scans the cut between indices `j` and `j+1` of a bi-infinite word.
pub fn markoff_scan_at_cut(s: &BiInfiniteWord, j: i64, max_radius: usize) -> Result<Verdict3> {
    Ok(to_verdict(scan_biinfinite(s, j, max_radius)?, j))
}

/// Scans the cut between positions `j` and `j+1` of a finite word, with the
/// radius limited by the ends of the word.
pub fn markoff_scan_at_cut_in_word(w: &Word, j: usize) -> Result<Verdict3> {
    let letter = |i: i64| Ok(usize::try_from(i).ok().and_then(|i| w.get(i)));
    let scan = scan_cut(letter, |_| false, j as i64, w.len())?;
    Ok(to_verdict(scan, j as i64))
}

/// Whether the cut at `j` is a mirror cut (`u = v`): `Some(true)` when
/// certified, `Some(false)` when a disagreement was found, `None` when the
/// radius ran out.
pub fn mirror_cut(s: &BiInfiniteWord, j: i64, max_radius: usize) -> Result<Option<bool>> {
    Ok(match scan_biinfinite(s, j, max_radius)? {
        CutScan::Mirror => Some(true),
        CutScan::Allowed { .. } | CutScan::Forbidden { .. } => Some(false),
        CutScan::Undecided => None,
    })
}

/// Radius that makes the scan at cut `j` exact for an eventually periodic
/// representation.
pub(crate) fn exact_radius(s: &BiInfiniteWord, j: i64) -> usize {
    match s.normalized() {
        BiInfiniteWord::Periodic { period, .. } => 2 * period.len() + 2,
        BiInfiniteWord::DoublyEventuallyPeriodic {
            left,
            center,
            right,
        } => {
            let lcm = left.len().lcm(&right.len());
            let k0 = (j + 1).max(center.len() as i64 - j - 1).max(1) as usize;
            k0 + lcm + 2
        }
        _ => 0,
    }
}

/// The first violating cut of `period^ω` within one period, if any.
pub fn periodic_violation(period: &Word) -> Result<Option<(i64, Word)>> {
    let s = BiInfiniteWord::periodic(period.clone())?;
    let p = period.len();
    for j in 0..p as i64 {
        if s.letter_at(j)? == s.letter_at(j + 1)? {
            continue;
        }
        match scan_biinfinite(&s, j, 2 * p + 2)? {
            CutScan::Forbidden { m } => return Ok(Some((j, m))),
            CutScan::Undecided => unreachable!("periodic scans are certified within P steps"),
            _ => {}
        }
    }
    Ok(None)
}

/// Exact decision of the Markoff condition for `period^ω`.
pub fn satisfies_markoff_periodic(period: &Word) -> Result<bool> {
    Ok(periodic_violation(period)?.is_none())
}

/// Exact balance test for `period^ω`. Lengths `1..=P` suffice: a window of
/// length `n + P` has exactly `|period|_a` more `a`s than its length-`n` prefix.
pub fn is_balanced_periodic(period: &Word) -> Result<bool> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let p = period.len();
    let doubled = period.repeat(2);
    let mut prefix = vec![0usize; 2 * p + 1];
    for (i, &l) in doubled.letters().iter().enumerate() {
        prefix[i + 1] = prefix[i] + usize::from(l == Letter::A);
    }
    for n in 1..=p {
        let counts = (0..p).map(|start| prefix[start + n] - prefix[start]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        if hi > lo + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every occurrence of `x·m̃·x·y·m·y` (`x ≠ y`) in `w`, as (start position, m).
///
/// Brute force over all start positions and lengths, independent of the cut scan.
pub fn forbidden_factor_scan(w: &Word) -> Vec<(usize, Word)> {
    let letters = w.letters();
    let n = letters.len();
    let mut found = Vec::new();
    for start in 0..n {
        let mut mlen = 0;
        while start + 2 * mlen + 4 <= n {
            let f = &letters[start..start + 2 * mlen + 4];
            let (x, y) = (f[0], f[mlen + 2]);
            let matches = x != y
                && f[mlen + 1] == x
                && f[2 * mlen + 3] == y
                && (0..mlen).all(|t| f[mlen - t] == f[mlen + 3 + t]);
            if matches {
                found.push((start, Word::new(f[mlen + 3..mlen + 3 + mlen].to_vec())));
            }
            mlen += 1;
        }
    }
    found
}

/// Cut index (position of the first letter of the `xy` pair) of a forbidden
/// factor found by [`forbidden_factor_scan`].
pub fn forbidden_cut_index(start: usize, m: &Word) -> usize {
    start + m.len() + 1
}

/// All `m` such that `y·m̃·x·y·m·x` occurs in `w` for some `{x, y} = {a, b}`.
pub fn markoff_factors(w: &Word) -> BTreeSet<Word> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = BTreeSet::new();
    for c in 0..n.saturating_sub(1) {
        let (x, y) = (letters[c], letters[c + 1]);
        if x == y {
            continue;
        }
        let mut k = 1;
        while k <= c && c + 1 + k < n {
            let (l, r) = (letters[c - k], letters[c + 1 + k]);
            if l != r {
                if l == y && r == x {
                    out.insert(Word::new(letters[c + 2..c + 1 + k].to_vec()));
                }
                break;
            }
            k += 1;
        }
    }
    out
}

/// Decides whether `m` is a Markoff word by exhibiting the witness word
/// `(a·m·b)^ω`: it must satisfy the condition and contain `y·m̃·x·y·m·x`.
pub fn is_markoff_word(m: &Word) -> bool {
    let period = m.wrap(Letter::A, Letter::B);
    if !satisfies_markoff_periodic(&period).expect("non-empty period") {
        return false;
    }
    let window = period.repeat(4);
    markoff_factors(&window).contains(m)
}

/// Window check of the condition on `[from, to)`: the first forbidden factor
/// inside the window, reported as (cut index, m).
pub fn window_violation(s: &BiInfiniteWord, from: i64, to: i64) -> Result<Option<(i64, Word)>> {
    let w = s.window(from, to)?;
    Ok(forbidden_factor_scan(&w)
        .into_iter()
        .next()
        .map(|(start, m)| (from + forbidden_cut_index(start, &m) as i64, m)))
}
