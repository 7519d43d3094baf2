//! Lines in the plane and their cutting sequences.
//!
//! A line is given by a slope (a coprime pair `(p, q)` meaning rise `q` over
//! run `p`, or a continued-fraction prefix of an irrational slope) and a
//! rational intercept `β`. The letter at step index `i` is `b` exactly when
//! `⌊α(i+1) + β⌋ > ⌊αi + β⌋`, where `α = slope / (1 + slope)` is the
//! frequency of `b` among the unit steps of the lattice path below the line.
//! For the rational slope `q/p` with `β = 0` the letters of one period are
//! the lower Christoffel word of `(p, q)`.
//!
//! Irrational slopes are never rounded. Each floor is decided by trapping `α`
//! strictly between two consecutive convergent bounds of the supplied prefix;
//! when the trap is too wide the computation fails with
//! [`Error::InsufficientPrecision`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::christoffel::Slope;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Prefix `[a0; a1, a2, ..., an]` of the continued fraction of an irrational
/// positive number. `a0 ≥ 0`, every later term `≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfPrefix {
    integer_part: u64,
    terms: Vec<u64>,
}

impl CfPrefix {
    pub fn new(integer_part: u64, terms: Vec<u64>) -> Result<CfPrefix> {
        if terms.contains(&0) {
            return Err(Error::Parse(
                "partial quotients after the integer part must be at least 1".into(),
            ));
        }
        if integer_part == 0 && terms.is_empty() {
            return Err(Error::Parse(
                "a slope prefix [0;] carries no information; supply at least one partial quotient"
                    .into(),
            ));
        }
        Ok(CfPrefix {
            integer_part,
            terms,
        })
    }

    pub fn integer_part(&self) -> u64 {
        self.integer_part
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Number of supplied partial quotients, counting the integer part.
    pub fn len(&self) -> usize {
        self.terms.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// A longer prefix of the same number.
    pub fn extended(&self, more: &[u64]) -> Result<CfPrefix> {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(more);
        CfPrefix::new(self.integer_part, terms)
    }

    /// Partial quotients `[0; c1, c2, ...]` of `γ / (1 + γ)` where `γ` is this number.
    fn step_frequency_terms(&self) -> Vec<u64> {
        if self.integer_part >= 1 {
            let mut t = vec![1, self.integer_part];
            t.extend_from_slice(&self.terms);
            t
        } else {
            let mut t = vec![self.terms[0] + 1];
            t.extend_from_slice(&self.terms[1..]);
            t
        }
    }
}

impl fmt::Display for CfPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cf:{}", self.integer_part)?;
        for t in &self.terms {
            write!(f, ",{t}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SlopeSpec {
    Rational(Slope),
    Irrational(CfPrefix),
}

impl SlopeSpec {
    pub fn is_irrational(&self) -> bool {
        matches!(self, SlopeSpec::Irrational(_))
    }
}

impl fmt::Display for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeSpec::Rational(s) => write!(f, "{}/{}", s.q(), s.p()),
            SlopeSpec::Irrational(cf) => write!(f, "{cf}"),
        }
    }
}

impl FromStr for SlopeSpec {
    type Err = Error;

    /// `"q/p"` (rise over run) or `"cf:a0,a1,a2,..."`. A trailing `...` is allowed.
    fn from_str(s: &str) -> Result<SlopeSpec> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("cf:") {
            let mut nums = Vec::new();
            for part in body.split(',').map(str::trim) {
                if part == "..." || part == "…" {
                    break;
                }
                nums.push(
                    part.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad partial quotient {part:?}")))?,
                );
            }
            let (&a0, rest) = nums
                .split_first()
                .ok_or_else(|| Error::Parse("empty continued fraction".into()))?;
            return Ok(SlopeSpec::Irrational(CfPrefix::new(a0, rest.to_vec())?));
        }
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("slope {s:?} is neither q/p nor cf:...")))?;
        let q = num
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad numerator {num:?}")))?;
        let p = den
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad denominator {den:?}")))?;
        Ok(SlopeSpec::Rational(Slope::new(p, q)?))
    }
}

/// Which lattice path the cutting sequence follows. `Lower` uses floors,
/// `Upper` uses ceilings; the two differ only where the line meets a
/// lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineSpec {
    pub slope: SlopeSpec,
    pub intercept: BigRational,
}

impl LineSpec {
    pub fn new(slope: SlopeSpec, intercept: BigRational) -> LineSpec {
        LineSpec { slope, intercept }
    }

    pub fn rational(slope: Slope) -> LineSpec {
        LineSpec::new(SlopeSpec::Rational(slope), BigRational::zero())
    }

    /// Whether `αi + β` is an integer for some integer `i`. For an irrational
    /// slope and rational intercept this happens only at `i = 0`, so it is
    /// decided by the intercept alone.
    pub fn meets_lattice_point(&self) -> bool {
        match &self.slope {
            SlopeSpec::Irrational(_) => self.intercept.is_integer(),
            SlopeSpec::Rational(s) => {
                // αi + β ∈ ℤ for some i iff β·(p+q) is an integer (α = q/(p+q), gcd(q, p+q) = 1).
                let n = BigInt::from(s.p() + s.q());
                (&self.intercept * BigRational::from_integer(n)).is_integer()
            }
        }
    }

    /// `⌊αi + β⌋` (lower) or `⌈αi + β⌉` (upper).
    pub fn step_floor(&self, i: i64, side: PathSide) -> Result<BigInt> {
        match &self.slope {
            SlopeSpec::Rational(s) => {
                let alpha = BigRational::new(BigInt::from(s.q()), BigInt::from(s.p() + s.q()));
                let v = alpha * BigRational::from_integer(BigInt::from(i)) + &self.intercept;
                Ok(round(&v, side))
            }
            SlopeSpec::Irrational(cf) => self.resolve_irrational(cf, i, side),
        }
    }

    fn resolve_irrational(&self, cf: &CfPrefix, i: i64, side: PathSide) -> Result<BigInt> {
        if i == 0 {
            return Ok(round(&self.intercept, side));
        }
        let terms = cf.step_frequency_terms();
        let (lo, hi) = trap(&terms);
        let at = |a: &BigRational| a * BigRational::from_integer(BigInt::from(i)) + &self.intercept;
        let (mut x, mut y) = (at(&lo), at(&hi));
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        // αi + β lies in the open interval (x, y) and is never an integer.
        let decided = match side {
            PathSide::Lower => {
                let f = x.floor().to_integer();
                (y <= BigRational::from_integer(&f + 1)).then_some(f)
            }
            PathSide::Upper => {
                let c = y.ceil().to_integer();
                (x >= BigRational::from_integer(&c - 1)).then_some(c)
            }
        };
        decided.ok_or_else(|| Error::InsufficientPrecision {
            index: i,
            terms_supplied: cf.len(),
            extra_terms_hint: extra_terms_hint(&terms, i, &x, &y),
        })
    }

    /// The letter at step index `i`.
    pub fn letter_at(&self, i: i64, side: PathSide) -> Result<Letter> {
        let here = self.step_floor(i, side)?;
        let next = self.step_floor(i + 1, side)?;
        Ok(if next > here { Letter::B } else { Letter::A })
    }
}

impl fmt::Display for LineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "slope={};intercept={}", self.slope, self.intercept)
    }
}

impl FromStr for LineSpec {
    type Err = Error;

    /// `slope=<slope>;intercept=<num/den>`; the intercept defaults to 0.
    fn from_str(s: &str) -> Result<LineSpec> {
        let mut slope = None;
        let mut intercept = BigRational::zero();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(v) = part.strip_prefix("slope=") {
                slope = Some(v.parse()?);
            } else if let Some(v) = part.strip_prefix("intercept=") {
                intercept = parse_rational(v)?;
            } else {
                return Err(Error::Parse(format!("unknown line field {part:?}")));
            }
        }
        let slope = slope.ok_or_else(|| Error::Parse("line needs slope=...".into()))?;
        Ok(LineSpec::new(slope, intercept))
    }
}

/// `"n"` or `"n/d"` with `d ≠ 0`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn round(v: &BigRational, side: PathSide) -> BigInt {
    match side {
        PathSide::Lower => v.floor().to_integer(),
        PathSide::Upper => v.ceil().to_integer(),
    }
}

/// Convergent numerators/denominators `(h_k, k_k, h_{k-1}, k_{k-1})` of `[0; c1..ck]`.
fn convergents(terms: &[u64]) -> (BigInt, BigInt, BigInt, BigInt) {
    // h_{-1}/k_{-1} = 1/0, h_0/k_0 = 0/1
    let (mut h, mut k) = (BigInt::zero(), BigInt::one());
    let (mut h_prev, mut k_prev) = (BigInt::one(), BigInt::zero());
    for &c in terms {
        let c = BigInt::from(c);
        let h_next = &c * &h + &h_prev;
        let k_next = &c * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    (h, k, h_prev, k_prev)
}

/// Open interval containing every irrational whose expansion starts `[0; terms...]`.
fn trap(terms: &[u64]) -> (BigRational, BigRational) {
    let (h, k, hp, kp) = convergents(terms);
    let a = BigRational::new(h.clone(), k.clone());
    let b = BigRational::new(h + hp, k + kp);
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Rough count of further partial quotients needed, assuming the slowest
/// possible growth (all ones) and that `αi + β` sits near the middle of the
/// current trap.
fn extra_terms_hint(terms: &[u64], i: i64, x: &BigRational, y: &BigRational) -> usize {
    let mid = ((x + y) / BigRational::from_integer(BigInt::from(2)))
        .to_f64()
        .unwrap_or(0.0);
    let gap = (mid - mid.round()).abs().max(1e-12);
    let (_, k, _, kp) = convergents(terms);
    let (mut k, mut kp) = (k.to_f64().unwrap_or(f64::MAX), kp.to_f64().unwrap_or(f64::MAX));
    let scale = i.unsigned_abs() as f64;
    for extra in 1..=200 {
        let next = k + kp;
        kp = k;
        k = next;
        if scale / (k * (k + kp)) < gap / 2.0 {
            return extra;
        }
    }
    200
}

/// Letters `s_i` for `i ∈ [from, to)` of the lower cutting sequence of `line`.
pub fn mechanical_window(line: &LineSpec, from: i64, to: i64) -> Result<Word> {
    mechanical_window_side(line, from, to, PathSide::Lower)
}

pub fn mechanical_window_side(line: &LineSpec, from: i64, to: i64, side: PathSide) -> Result<Word> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    if from == to {
        return Ok(Word::empty());
    }
    let floors = (from..=to)
        .map(|i| line.step_floor(i, side))
        .collect::<Result<Vec<_>>>()?;
    Ok(floors
        .windows(2)
        .map(|f| if f[1] > f[0] { Letter::B } else { Letter::A })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn pi_over_4() -> CfPrefix {
        CfPrefix::new(0, vec![1, 3, 1, 1, 1, 15, 2, 72, 1, 9, 1, 17, 1, 2, 1, 5, 1, 1, 10, 1, 2, 2, 20])
            .unwrap()
    }

    #[test]
    fn rational_windows() {
        let l = LineSpec::rational(Slope::new(5, 3).unwrap());
        assert_eq!(mechanical_window(&l, 0, 8).unwrap(), w("aabaabab"));
        assert_eq!(mechanical_window(&l, 0, 16).unwrap(), w("aabaababaabaabab"));
        assert_eq!(mechanical_window(&l, 0, 0).unwrap(), w(""));
        let l = LineSpec::rational(Slope::new(1, 1).unwrap());
        assert_eq!(mechanical_window(&l, 0, 4).unwrap(), w("abab"));
        assert!(mechanical_window(&l, 3, 1).is_err());
    }

    #[test]
    fn slope_parsing() {
        assert_eq!(
            "3/5".parse::<SlopeSpec>().unwrap(),
            SlopeSpec::Rational(Slope::new(5, 3).unwrap())
        );
        let s: SlopeSpec = "cf:0,1,3,1,1,...".parse().unwrap();
        assert_eq!(s, SlopeSpec::Irrational(CfPrefix::new(0, vec![1, 3, 1, 1]).unwrap()));
        assert!("cf:0".parse::<SlopeSpec>().is_err());
        assert!("cf:1,0".parse::<SlopeSpec>().is_err());
        assert!("4/2".parse::<SlopeSpec>().is_err());
        let line: LineSpec = "slope=cf:0,1,3;intercept=1/2".parse().unwrap();
        assert_eq!(line.intercept, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn irrational_matches_float_for_well_separated_points() {
        let line = LineSpec::new(SlopeSpec::Irrational(pi_over_4()), BigRational::zero());
        let gamma = std::f64::consts::FRAC_PI_4;
        let alpha = gamma / (1.0 + gamma);
        let word = mechanical_window(&line, -40, 40).unwrap();
        let expected: Word = (-40..40)
            .map(|i: i64| {
                if (alpha * (i + 1) as f64).floor() > (alpha * i as f64).floor() {
                    Letter::B
                } else {
                    Letter::A
                }
            })
            .collect();
        assert_eq!(word, expected);
        assert!(word.is_balanced());
    }

    #[test]
    fn short_prefix_reports_precision() {
        let line = LineSpec::new(
            SlopeSpec::Irrational(CfPrefix::new(0, vec![1, 3]).unwrap()),
            BigRational::zero(),
        );
        match mechanical_window(&line, 0, 200) {
            Err(Error::InsufficientPrecision {
                terms_supplied,
                extra_terms_hint,
                ..
            }) => {
                assert_eq!(terms_supplied, 3);
                assert!(extra_terms_hint >= 1);
            }
            other => panic!("expected precision failure, got {other:?}"),
        }
    }

    #[test]
    fn lower_and_upper_differ_only_at_lattice_point() {
        let line = LineSpec::new(SlopeSpec::Irrational(pi_over_4()), BigRational::zero());
        let lower = mechanical_window_side(&line, -20, 20, PathSide::Lower).unwrap();
        let upper = mechanical_window_side(&line, -20, 20, PathSide::Upper).unwrap();
        let diffs: Vec<usize> = (0..lower.len())
            .filter(|&k| lower.get(k) != upper.get(k))
            .collect();
        // indices -1 and 0 sit at offsets 19 and 20
        assert_eq!(diffs, vec![19, 20]);
        assert!(line.meets_lattice_point());
        let shifted = LineSpec::new(line.slope.clone(), BigRational::new(1.into(), 2.into()));
        assert!(!shifted.meets_lattice_point());
        assert_eq!(
            mechanical_window_side(&shifted, -20, 20, PathSide::Lower).unwrap(),
            mechanical_window_side(&shifted, -20, 20, PathSide::Upper).unwrap()
        );
    }

    #[test]
    fn extending_a_prefix_keeps_resolved_letters() {
        let short = CfPrefix::new(0, vec![1, 3, 1, 1, 1]).unwrap();
        let long = short.extended(&[15, 2, 72]).unwrap();
        let a = LineSpec::new(SlopeSpec::Irrational(short), BigRational::zero());
        let b = LineSpec::new(SlopeSpec::Irrational(long), BigRational::zero());
        let wa = mechanical_window(&a, 0, 10).unwrap();
        assert_eq!(wa, mechanical_window(&b, 0, 10).unwrap());
    }
}
