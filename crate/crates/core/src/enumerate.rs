//! Exhaustive checks of the word-level equivalences over all words of a
//! given length, split across threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::christoffel::{is_central, is_christoffel, totient};
use crate::error::{Error, Result};
use crate::markoff::{is_balanced_periodic, is_markoff_word, satisfies_markoff_periodic};
use crate::word::{Letter, Word};

/// Largest length accepted unless the caller raises it.
pub const HARD_LIMIT: usize = 20;

/// Counts for all words `m` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub n: usize,
    pub central: u64,
    pub markoff: u64,
    /// Words `m` with `a·m·b` a Christoffel word.
    pub christoffel: u64,
    /// `φ(n + 2)`, computed independently of the word predicates.
    pub totient: u64,
    /// Periods of length `n` (when `n ≥ 1`) checked for balance ⇔ condition.
    pub periods_checked: u64,
    pub failures: Vec<String>,
}

#[derive(Default)]
struct Tally {
    central: u64,
    markoff: u64,
    christoffel: u64,
    periods: u64,
    failures: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.central += other.central;
        self.markoff += other.markoff;
        self.christoffel += other.christoffel;
        self.periods += other.periods;
        self.failures.extend(other.failures);
        self
    }
}

fn check_one(m: Word, with_periods: bool) -> Tally {
    let central = is_central(&m);
    let markoff = is_markoff_word(&m);
    let christoffel = is_christoffel(&m.wrap(Letter::A, Letter::B));
    let mut t = Tally {
        central: central as u64,
        markoff: markoff as u64,
        christoffel: christoffel as u64,
        ..Tally::default()
    };
    if markoff != central {
        t.failures.push(format!("{m:?}: markoff={markoff} central={central}"));
    }
    if christoffel != central {
        t.failures.push(format!("a{m}b: christoffel={christoffel} central={central}"));
    }
    if with_periods {
        let cond = satisfies_markoff_periodic(&m).expect("non-empty period");
        let bal = is_balanced_periodic(&m).expect("non-empty period");
        t.periods = 1;
        if cond != bal {
            t.failures.push(format!("({m})^ω: condition={cond} balanced={bal}"));
        }
    }
    t
}

/// One row; `check_periods` adds the periodic balance ⇔ condition check.
pub fn enumerate_row(n: usize, check_periods: bool) -> EnumerationRow {
    let with_periods = check_periods && n >= 1;
    let mut t = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| check_one(Word::from_bits(bits, n), with_periods))
        .reduce(Tally::default, Tally::merge);
    t.failures.sort();
    let phi = totient(n as u64 + 2);
    if t.central != phi {
        t.failures.push(format!("central count {} differs from totient {phi}", t.central));
    }
    EnumerationRow {
        n,
        central: t.central,
        markoff: t.markoff,
        christoffel: t.christoffel,
        totient: phi,
        periods_checked: t.periods,
        failures: t.failures,
    }
}

/// Rows `0..=max_len`; refuses `max_len > bound`.
pub fn enumerate_all(max_len: usize, bound: usize, period_limit: usize) -> Result<Vec<EnumerationRow>> {
    if max_len > bound {
        return Err(Error::BoundExceeded {
            requested: max_len,
            bound,
        });
    }
    Ok((0..=max_len).map(|n| enumerate_row(n, n <= period_limit)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let rows = enumerate_all(8, HARD_LIMIT, 8).unwrap();
        assert_eq!(rows[0].central, 1);
        assert_eq!(rows[3].central, 4);
        for r in &rows {
            assert!(r.failures.is_empty(), "{r:?}");
            assert_eq!(r.central, r.markoff);
            assert_eq!(r.central, r.christoffel);
            assert_eq!(r.central, r.totient);
        }
        assert_eq!(rows[4].periods_checked, 16);
    }

    #[test]
    fn bound() {
        assert!(matches!(
            enumerate_all(21, HARD_LIMIT, 0),
            Err(Error::BoundExceeded { requested: 21, bound: 20 })
        ));
    }
}
