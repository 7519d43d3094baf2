//! Continued-fraction values `λ_i` and `Λ` of `{1,2}`-valued bi-infinite
//! sequences, computed exactly as quadratic surds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::biinfinite::BiInfiniteWord;
use crate::error::{Error, Result};
use crate::surd::{QuadraticSurd, SurdJson};
use crate::word::{Letter, Word};

/// `[0; preperiod, period, period, …]`. An empty period means a finite
/// expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialQuotients {
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

impl PartialQuotients {
    pub fn new(preperiod: Vec<u32>, period: Vec<u32>) -> Result<PartialQuotients> {
        if let Some(pos) = preperiod.iter().chain(&period).position(|&a| a == 0) {
            return Err(Error::Parse(format!("partial quotient {pos} is zero")));
        }
        Ok(PartialQuotients { preperiod, period })
    }

    /// Term `k` (0-based, after the leading 0).
    pub fn term(&self, k: usize) -> Option<u32> {
        if k < self.preperiod.len() {
            Some(self.preperiod[k])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(k - self.preperiod.len()) % self.period.len()])
        }
    }
}

/// Exact value of `[0; q₁, q₂, …]`.
pub fn cf_value(q: &PartialQuotients) -> Result<QuadraticSurd> {
    let mut pre = q.preperiod.iter().rev();
    // z is the value of the tail that starts right after the preperiod
    let mut z = if q.period.is_empty() {
        match pre.next() {
            None => return Ok(QuadraticSurd::zero()),
            Some(&a) => QuadraticSurd::from_integer(a),
        }
    } else {
        purely_periodic(&q.period)?
    };
    for &a in pre {
        z = QuadraticSurd::from_integer(a).add(&z.recip()?)?;
    }
    z.recip()
}

/// The root `> 1` of `y = [a₁; a₂, …, aₙ, y]`.
fn purely_periodic(period: &[u32]) -> Result<QuadraticSurd> {
    // [[h, h'], [k, k']] = Π [[a, 1], [1, 0]]
    let (mut h, mut h1, mut k, mut k1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for &a in period {
        let a = BigInt::from(a);
        let nh = &a * &h + &h1;
        let nk = &a * &k + &k1;
        h1 = std::mem::replace(&mut h, nh);
        k1 = std::mem::replace(&mut k, nk);
    }
    // y = (h·y + h')/(k·y + k')  ⇒  k·y² + (k' − h)·y − h' = 0
    if k.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let b = &h - &k1;
    let disc = &b * &b + BigInt::from(4) * &k * &h1;
    QuadraticSurd::new(b, BigInt::one(), BigInt::from(2) * k, disc)
}

/// A `{1,2}`-valued bi-infinite sequence with eventually periodic tails,
/// indexed the same way as the word it was valued from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TwoSidedSequence {
    Periodic {
        period: Vec<u32>,
        phase: usize,
    },
    /// `left` repeats towards −∞ (with `left[L-1]` at index −1), `center`
    /// occupies `0..|center|`, `right` repeats towards +∞.
    DoublyEventuallyPeriodic {
        left: Vec<u32>,
        center: Vec<u32>,
        right: Vec<u32>,
    },
}

impl TwoSidedSequence {
    pub fn periodic(period: Vec<u32>) -> Result<TwoSidedSequence> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        check_entries(&period)?;
        Ok(TwoSidedSequence::Periodic { period, phase: 0 })
    }

    pub fn doubly_eventually_periodic(left: Vec<u32>, center: Vec<u32>, right: Vec<u32>) -> Result<TwoSidedSequence> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        for part in [&left, &center, &right] {
            check_entries(part)?;
        }
        Ok(TwoSidedSequence::DoublyEventuallyPeriodic { left, center, right })
    }

    pub fn value_at(&self, i: i64) -> u32 {
        match self {
            TwoSidedSequence::Periodic { period, phase } => {
                period[(i + *phase as i64).rem_euclid(period.len() as i64) as usize]
            }
            TwoSidedSequence::DoublyEventuallyPeriodic { left, center, right } => {
                let c = center.len() as i64;
                if i < 0 {
                    left[i.rem_euclid(left.len() as i64) as usize]
                } else if i < c {
                    center[i as usize]
                } else {
                    right[((i - c) % right.len() as i64) as usize]
                }
            }
        }
    }

    /// `s_{i+1}, s_{i+2}, …` as partial quotients.
    pub fn right_tail(&self, i: i64) -> PartialQuotients {
        let (start, len) = match self {
            TwoSidedSequence::Periodic { period, .. } => (i + 1, period.len() as i64),
            TwoSidedSequence::DoublyEventuallyPeriodic { center, right, .. } => {
                ((i + 1).max(center.len() as i64), right.len() as i64)
            }
        };
        PartialQuotients {
            preperiod: (i + 1..start).map(|k| self.value_at(k)).collect(),
            period: (start..start + len).map(|k| self.value_at(k)).collect(),
        }
    }

    /// `s_{i−1}, s_{i−2}, …` as partial quotients.
    pub fn left_tail(&self, i: i64) -> PartialQuotients {
        let (start, len) = match self {
            TwoSidedSequence::Periodic { period, .. } => (i - 1, period.len() as i64),
            TwoSidedSequence::DoublyEventuallyPeriodic { left, .. } => ((i - 1).min(-1), left.len() as i64),
        };
        PartialQuotients {
            preperiod: (start + 1..i).rev().map(|k| self.value_at(k)).collect(),
            period: (start - len + 1..=start).rev().map(|k| self.value_at(k)).collect(),
        }
    }

    fn regimes(&self) -> Vec<TwoSidedSequence> {
        match self {
            TwoSidedSequence::Periodic { .. } => vec![],
            TwoSidedSequence::DoublyEventuallyPeriodic { left, right, .. } => vec![
                TwoSidedSequence::Periodic {
                    period: left.clone(),
                    phase: 0,
                },
                TwoSidedSequence::Periodic {
                    period: right.clone(),
                    phase: 0,
                },
            ],
        }
    }

    /// Indices whose λ values, together with the tail regimes, realize `Λ`.
    pub fn representative_indices(&self) -> std::ops::Range<i64> {
        match self {
            TwoSidedSequence::Periodic { period, .. } => 0..period.len() as i64,
            TwoSidedSequence::DoublyEventuallyPeriodic { left, center, right } => {
                -(left.len() as i64)..(center.len() + right.len()) as i64
            }
        }
    }
}

impl fmt::Display for TwoSidedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            TwoSidedSequence::Periodic { period, phase: 0 } => write!(f, "({})^ω", join(period)),
            TwoSidedSequence::Periodic { period, phase } => {
                write!(f, "({})^ω phase {phase}", join(period))
            }
            TwoSidedSequence::DoublyEventuallyPeriodic { left, center, right } => {
                write!(f, "({})^ω [{}] ({})^ω", join(left), join(center), join(right))
            }
        }
    }
}

fn check_entries(v: &[u32]) -> Result<()> {
    match v.iter().find(|&&x| x == 0) {
        Some(_) => Err(Error::Parse("sequence entries must be positive".into())),
        None => Ok(()),
    }
}

/// Parses `"2,2,1,1"`.
pub fn parse_period(s: &str) -> Result<Vec<u32>> {
    let v = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad sequence entry {t:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    if let Some(bad) = v.iter().find(|&&x| !(1..=2).contains(&x)) {
        return Err(Error::Parse(format!("entry {bad} is outside {{1,2}}")));
    }
    Ok(v)
}

/// How `{a,b}` letters become positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Valuation {
    /// `a ↦ 1,1` and `b ↦ 2,2`.
    Double,
    /// `a ↦ a_value`, `b ↦ b_value`.
    Identity { a_value: u32, b_value: u32 },
}

impl Valuation {
    pub fn identity(a_value: u32, b_value: u32) -> Result<Valuation> {
        if a_value == b_value || !(1..=2).contains(&a_value) || !(1..=2).contains(&b_value) {
            return Err(Error::Parse(format!(
                "identity valuation needs distinct values in {{1,2}}, got a={a_value}, b={b_value}"
            )));
        }
        Ok(Valuation::Identity { a_value, b_value })
    }

    pub fn apply(&self, w: &Word) -> Vec<u32> {
        match self {
            Valuation::Double => w
                .letters()
                .iter()
                .flat_map(|&l| {
                    let v = if l == Letter::A { 1 } else { 2 };
                    [v, v]
                })
                .collect(),
            Valuation::Identity { a_value, b_value } => w
                .letters()
                .iter()
                .map(|&l| if l == Letter::A { *a_value } else { *b_value })
                .collect(),
        }
    }

    fn scale(&self) -> usize {
        match self {
            Valuation::Double => 2,
            Valuation::Identity { .. } => 1,
        }
    }

    /// Values a bi-infinite word; index `i` of the word maps to index
    /// `scale·i` of the sequence.
    pub fn apply_biinfinite(&self, s: &BiInfiniteWord) -> Result<TwoSidedSequence> {
        match s.normalized() {
            BiInfiniteWord::Periodic { period, phase } => Ok(TwoSidedSequence::Periodic {
                period: self.apply(&period),
                phase: phase * self.scale(),
            }),
            BiInfiniteWord::DoublyEventuallyPeriodic { left, center, right } => {
                TwoSidedSequence::doubly_eventually_periodic(
                    self.apply(&left),
                    self.apply(&center),
                    self.apply(&right),
                )
            }
            _ => Err(Error::NotEventuallyPeriodic { index: 0 }),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Double => write!(f, "double"),
            Valuation::Identity { a_value, b_value } => write!(f, "identity:a={a_value},b={b_value}"),
        }
    }
}

impl FromStr for Valuation {
    type Err = Error;

    /// `double`, `identity` (a↦1, b↦2) or `identity:a=2,b=1`.
    fn from_str(s: &str) -> Result<Valuation> {
        match s.trim() {
            "double" => Ok(Valuation::Double),
            "identity" => Ok(Valuation::Identity { a_value: 1, b_value: 2 }),
            other => {
                let body = other
                    .strip_prefix("identity:")
                    .ok_or_else(|| Error::Parse(format!("unknown valuation {other:?}")))?;
                let (mut a, mut b) = (None, None);
                for part in body.split(',') {
                    let (k, v) = part
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("bad valuation field {part:?}")))?;
                    let v = v
                        .trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad valuation value {v:?}")))?;
                    match k.trim() {
                        "a" => a = Some(v),
                        "b" => b = Some(v),
                        _ => return Err(Error::Parse(format!("bad valuation field {part:?}"))),
                    }
                }
                match (a, b) {
                    (Some(a), Some(b)) => Valuation::identity(a, b),
                    _ => Err(Error::Parse("identity valuation needs both a= and b=".into())),
                }
            }
        }
    }
}

pub fn double_valuation(s: &BiInfiniteWord) -> Result<TwoSidedSequence> {
    Valuation::Double.apply_biinfinite(s)
}

pub fn identity_valuation(s: &BiInfiniteWord, a_value: u32, b_value: u32) -> Result<TwoSidedSequence> {
    Valuation::identity(a_value, b_value)?.apply_biinfinite(s)
}

/// `λ_i(s) = s_i + [0; s_{i+1}, …] + [0; s_{i−1}, …]`.
pub fn lambda_i(s: &TwoSidedSequence, i: i64) -> Result<QuadraticSurd> {
    let right = cf_value(&s.right_tail(i))?;
    let left = cf_value(&s.left_tail(i))?;
    QuadraticSurd::from_integer(s.value_at(i)).add(&right)?.add(&left)
}

/// `Λ(s) = sup_i λ_i(s)`.
pub fn lambda_sup(s: &TwoSidedSequence) -> Result<QuadraticSurd> {
    let mut best: Option<QuadraticSurd> = None;
    for v in s
        .representative_indices()
        .map(|i| lambda_i(s, i))
        .chain(s.regimes().iter().map(lambda_sup))
    {
        let v = v?;
        if best.as_ref().map_or(true, |b| v > *b) {
            best = Some(v);
        }
    }
    best.ok_or(Error::EmptyPeriod)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Comparison {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "Less",
            Comparison::Equal => "Equal",
            Comparison::Greater => "Greater",
        })
    }
}

pub fn compare_to_3(v: &QuadraticSurd) -> Comparison {
    v.cmp(&QuadraticSurd::from_integer(3)).into()
}

/// A surd in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdValue {
    pub exact: SurdJson,
    pub display: String,
    pub decimal: String,
}

pub const REPORT_DIGITS: usize = 30;

impl From<&QuadraticSurd> for SurdValue {
    fn from(s: &QuadraticSurd) -> SurdValue {
        SurdValue {
            exact: s.into(),
            display: s.to_string(),
            decimal: s.to_decimal(REPORT_DIGITS),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRow {
    pub index: i64,
    pub value: SurdValue,
    pub vs_3: Comparison,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub sequence: String,
    pub valuation: Option<Valuation>,
    pub lambdas: Vec<LambdaRow>,
    /// `Λ` of the two periodic tails, for doubly eventually periodic input.
    pub tail_regimes: Vec<SurdValue>,
    #[serde(rename = "Lambda")]
    pub lambda_sup: SurdValue,
    pub vs_3: Comparison,
    /// Indices in the table with `λ_i = 3` exactly.
    pub indices_equal_3: Vec<i64>,
    /// Whether the `{a,b}` ↔ class reading of these numbers is informational only.
    pub informational: bool,
}

impl SpectrumReport {
    /// The class suggested by the spectral values, when the input came from
    /// the doubling valuation: `Λ < 3` ↦ M1, `λ_i = 3` once ↦ M3, at least
    /// twice ↦ M4. Eventually periodic sequences cannot land in M2.
    pub fn spectral_class(&self) -> Option<&'static str> {
        if self.informational {
            return None;
        }
        match (self.vs_3, self.indices_equal_3.len()) {
            (Comparison::Less, _) => Some("M1"),
            (Comparison::Equal, 1) => Some("M3"),
            (Comparison::Equal, n) if n >= 2 => Some("M4"),
            _ => None,
        }
    }
}

/// λ table over the representative indices, `Λ`, and its comparison with 3.
pub fn sequence_report(s: &TwoSidedSequence, valuation: Option<Valuation>) -> Result<SpectrumReport> {
    let mut lambdas = Vec::new();
    let mut best: Option<QuadraticSurd> = None;
    let mut indices_equal_3 = Vec::new();
    for i in s.representative_indices() {
        let v = lambda_i(s, i)?;
        let vs_3 = compare_to_3(&v);
        if vs_3 == Comparison::Equal {
            indices_equal_3.push(i);
        }
        lambdas.push(LambdaRow {
            index: i,
            value: (&v).into(),
            vs_3,
        });
        if best.as_ref().map_or(true, |b| v > *b) {
            best = Some(v);
        }
    }
    let mut tail_regimes = Vec::new();
    for r in s.regimes() {
        let v = lambda_sup(&r)?;
        tail_regimes.push((&v).into());
        if best.as_ref().map_or(true, |b| v > *b) {
            best = Some(v);
        }
    }
    let best = best.ok_or(Error::EmptyPeriod)?;
    Ok(SpectrumReport {
        sequence: s.to_string(),
        valuation,
        lambdas,
        tail_regimes,
        lambda_sup: (&best).into(),
        vs_3: compare_to_3(&best),
        indices_equal_3,
        informational: !matches!(valuation, Some(Valuation::Double)),
    })
}

pub fn spectrum_report(s: &BiInfiniteWord, valuation: Valuation) -> Result<SpectrumReport> {
    let seq = valuation.apply_biinfinite(s)?;
    sequence_report(&seq, Some(valuation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biinfinite::xxyxx_form;
    use crate::christoffel::{lower_christoffel, Slope};
    use crate::word::w;
    use proptest::prelude::*;

    fn pq(pre: &[u32], per: &[u32]) -> PartialQuotients {
        PartialQuotients::new(pre.to_vec(), per.to_vec()).unwrap()
    }

    fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    /// floor(10^digits · [0; q₁, …, q_n]) from exact convergents.
    fn convergent_scaled(q: &PartialQuotients, n: usize, digits: u32) -> BigInt {
        let (mut h, mut h1, mut k, mut k1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
        for t in 0..n {
            let a = BigInt::from(q.term(t).unwrap());
            let nh = &a * &h + &h1;
            let nk = &a * &k + &k1;
            h1 = std::mem::replace(&mut h, nh);
            k1 = std::mem::replace(&mut k, nk);
        }
        h * BigInt::from(10).pow(digits) / k
    }

    fn decimal_scaled(s: &QuadraticSurd, digits: usize) -> BigInt {
        s.to_decimal(digits).replace('.', "").parse().unwrap()
    }

    #[test]
    fn cf_values() {
        assert_eq!(cf_value(&pq(&[], &[1])).unwrap(), surd(-1, 1, 2, 5));
        assert_eq!(cf_value(&pq(&[], &[2])).unwrap(), surd(-1, 1, 1, 2));
        assert_eq!(cf_value(&pq(&[2], &[])).unwrap(), QuadraticSurd::rational(1, 2).unwrap());
        assert_eq!(cf_value(&pq(&[], &[])).unwrap(), QuadraticSurd::zero());
        assert_eq!(cf_value(&pq(&[1, 2], &[])).unwrap(), QuadraticSurd::rational(2, 3).unwrap());
        assert!(PartialQuotients::new(vec![0], vec![]).is_err());
    }

    #[test]
    fn quadratic_identities() {
        let x = cf_value(&pq(&[], &[1])).unwrap();
        let one = QuadraticSurd::from_integer(1);
        assert_eq!(x.mul(&x).unwrap().add(&x).unwrap(), one);
        let y = cf_value(&pq(&[], &[2])).unwrap();
        let two_y = y.add(&y).unwrap();
        assert_eq!(y.mul(&y).unwrap().add(&two_y).unwrap(), one);
    }

    #[test]
    fn exact_three() {
        let v = QuadraticSurd::from_integer(2)
            .add(&cf_value(&pq(&[], &[1])).unwrap())
            .unwrap()
            .add(&cf_value(&pq(&[2], &[1])).unwrap())
            .unwrap();
        assert_eq!(compare_to_3(&v), Comparison::Equal);
        assert_eq!(v, QuadraticSurd::from_integer(3));
    }

    #[test]
    fn classical_lambdas() {
        let ones = TwoSidedSequence::periodic(vec![1]).unwrap();
        let twos = TwoSidedSequence::periodic(vec![2]).unwrap();
        let mixed = TwoSidedSequence::periodic(vec![2, 2, 1, 1]).unwrap();
        assert_eq!(lambda_i(&ones, 7).unwrap(), QuadraticSurd::sqrt(5).unwrap());
        assert_eq!(lambda_sup(&ones).unwrap(), QuadraticSurd::sqrt(5).unwrap());
        assert_eq!(lambda_sup(&twos).unwrap(), surd(0, 2, 1, 2));
        assert_eq!(lambda_i(&mixed, 0).unwrap(), surd(0, 1, 5, 221));
        assert_eq!(lambda_sup(&mixed).unwrap(), surd(0, 1, 5, 221));
        for s in [&ones, &twos, &mixed] {
            assert_eq!(compare_to_3(&lambda_sup(s).unwrap()), Comparison::Less);
        }
        let id = TwoSidedSequence::periodic(vec![1, 2]).unwrap();
        assert_eq!(lambda_sup(&id).unwrap(), surd(0, 2, 1, 3));
    }

    #[test]
    fn valuations() {
        assert_eq!(Valuation::Double.apply(&w("ab")), vec![1, 1, 2, 2]);
        assert_eq!(Valuation::Double.apply(&w("a")), vec![1, 1]);
        assert_eq!(
            double_valuation(&BiInfiniteWord::periodic(w("aabab")).unwrap()).unwrap(),
            TwoSidedSequence::periodic(vec![1, 1, 1, 1, 2, 2, 1, 1, 2, 2]).unwrap()
        );
        let id = Valuation::identity(1, 2).unwrap();
        assert_eq!(id.apply(&w("aabab")), vec![1, 1, 2, 1, 2]);
        assert_eq!(Valuation::identity(2, 1).unwrap().apply(&w("b")), vec![1]);
        assert!(id.apply(&Word::empty()).is_empty());
        assert!(Valuation::identity(1, 1).is_err());
        assert_eq!("identity:a=2,b=1".parse::<Valuation>().unwrap(), Valuation::identity(2, 1).unwrap());
        assert_eq!("double".parse::<Valuation>().unwrap(), Valuation::Double);
    }

    #[test]
    fn reports() {
        let r = spectrum_report(&BiInfiniteWord::periodic(w("a")).unwrap(), Valuation::Double).unwrap();
        assert_eq!(r.lambda_sup.display, "√5");
        assert_eq!(r.vs_3, Comparison::Less);
        assert_eq!(r.spectral_class(), Some("M1"));
        let r = spectrum_report(&BiInfiniteWord::periodic(w("ab")).unwrap(), Valuation::Double).unwrap();
        assert_eq!(r.lambda_sup.display, "√221/5");
        assert_eq!(r.lambda_sup.decimal, "2.973213749463701104522401642786");
        let json = serde_json::to_string(&r).unwrap();
        let back: SpectrumReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn xxyxx_attains_three_twice() {
        let s = xxyxx_form(Letter::A, Letter::B).unwrap();
        let r = spectrum_report(&s, Valuation::Double).unwrap();
        assert_eq!(r.vs_3, Comparison::Equal);
        assert_eq!(r.indices_equal_3, vec![0, 1]);
        assert_eq!(r.spectral_class(), Some("M4"));
    }

    #[test]
    fn fibonacci_family_increases_towards_three() {
        let mut prev = QuadraticSurd::zero();
        for (p, q) in [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)] {
            let word = lower_christoffel(Slope::new(p, q).unwrap());
            let s = double_valuation(&BiInfiniteWord::periodic(word).unwrap()).unwrap();
            let v = lambda_sup(&s).unwrap();
            assert_eq!(compare_to_3(&v), Comparison::Less);
            assert!(v > prev, "({p},{q}): {v} not above {prev}");
            prev = v;
        }
        // Markoff number 13 for "aab"
        let s = double_valuation(&BiInfiniteWord::periodic(w("aab")).unwrap()).unwrap();
        assert_eq!(lambda_sup(&s).unwrap(), surd(0, 1, 13, 1517));
    }

    #[test]
    fn dep_tails() {
        let s = TwoSidedSequence::doubly_eventually_periodic(vec![1, 2], vec![2], vec![1]).unwrap();
        // ... 1 2 1 2 | 2 | 1 1 1 ...
        assert_eq!(s.right_tail(-3), pq(&[1, 2, 2], &[1]));
        assert_eq!(s.left_tail(2), pq(&[1, 2], &[2, 1]));
        assert_eq!(s.left_tail(-1), pq(&[], &[1, 2]));
        let p = TwoSidedSequence::periodic(vec![1, 2, 2]).unwrap();
        assert_eq!(p.right_tail(0), pq(&[], &[2, 2, 1]));
        assert_eq!(p.left_tail(0), pq(&[], &[2, 2, 1]));
    }

    proptest! {
        #[test]
        fn decimal_matches_convergents(pre in prop::collection::vec(1u32..=2, 0..6),
                                       per in prop::collection::vec(1u32..=2, 1..6)) {
            let q = pq(&pre, &per);
            let exact = decimal_scaled(&cf_value(&q).unwrap(), 60);
            let approx = convergent_scaled(&q, 100, 60);
            let tol = BigInt::from(10).pow(30);
            prop_assert!((exact - approx).magnitude() < tol.magnitude());
        }

        #[test]
        fn shift_invariance(per in prop::collection::vec(1u32..=2, 1..7), i in -20i64..20) {
            let s = TwoSidedSequence::periodic(per.clone()).unwrap();
            let p = per.len() as i64;
            prop_assert_eq!(lambda_i(&s, i).unwrap(), lambda_i(&s, i + p).unwrap());
        }
    }
}
