//! Finitely described bi-infinite words.
//!
//! Indexing conventions:
//! - `Periodic { period, phase }`: index `i` holds `period[(i + phase) mod P]`,
//!   so `period[phase]` sits at index 0.
//! - `Spliced { source, x, y }` is `ũ·x·y·u` with `x` at index 0 and `y` at
//!   index 1, where `u = u_1 u_2 ...` is read from the source starting at its
//!   index 0. Index `1 + k` and index `-k` both hold `u_k`.
//! - `DoublyEventuallyPeriodic { left, center, right }`: the center occupies
//!   `0..|center|`, the right period repeats from `|center|` onward and the
//!   left period ends at index `-1`.
//! - `LineCut { line, side }` holds the cutting-sequence letter of step `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::line::{LineSpec, PathSide, SlopeSpec};
use crate::word::{Letter, Word};

/// A right-infinite word used as the `u` of a spliced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RightInfinite {
    /// `period^ω`
    Periodic(Word),
    /// The lower cutting sequence of a line, read from step 0.
    Line(LineSpec),
}

impl RightInfinite {
    /// `u_{k+1}`, i.e. the letter at offset `k ≥ 0`.
    pub fn letter_at(&self, k: u64) -> Result<Letter> {
        match self {
            RightInfinite::Periodic(p) => Ok(p.letters()[(k % p.len() as u64) as usize]),
            RightInfinite::Line(line) => line.letter_at(k as i64, PathSide::Lower),
        }
    }
}

impl fmt::Display for RightInfinite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RightInfinite::Periodic(p) => write!(f, "periodic:{p}"),
            RightInfinite::Line(l) => write!(f, "cut:{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BiInfiniteWord {
    Periodic {
        period: Word,
        phase: usize,
    },
    Spliced {
        source: RightInfinite,
        x: Letter,
        y: Letter,
    },
    DoublyEventuallyPeriodic {
        left: Word,
        center: Word,
        right: Word,
    },
    LineCut {
        line: LineSpec,
        side: PathSide,
    },
}

impl BiInfiniteWord {
    pub fn periodic(period: Word) -> Result<BiInfiniteWord> {
        BiInfiniteWord::periodic_with_phase(period, 0)
    }

    pub fn periodic_with_phase(period: Word, phase: usize) -> Result<BiInfiniteWord> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let phase = phase % period.len();
        Ok(BiInfiniteWord::Periodic { period, phase })
    }

    pub fn spliced(source: RightInfinite, x: Letter, y: Letter) -> Result<BiInfiniteWord> {
        if x == y {
            return Err(Error::EqualCutLetters);
        }
        if let RightInfinite::Periodic(p) = &source {
            if p.is_empty() {
                return Err(Error::EmptyPeriod);
            }
        }
        if let RightInfinite::Line(l) = &source {
            if let SlopeSpec::Rational(s) = &l.slope {
                // A rational line gives a periodic u; store it that way.
                let period = crate::line::mechanical_window(l, 0, s.len() as i64)?;
                return BiInfiniteWord::spliced(RightInfinite::Periodic(period), x, y);
            }
        }
        Ok(BiInfiniteWord::Spliced { source, x, y })
    }

    pub fn doubly_eventually_periodic(left: Word, center: Word, right: Word) -> Result<BiInfiniteWord> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(BiInfiniteWord::DoublyEventuallyPeriodic {
            left,
            center,
            right,
        })
    }

    pub fn line_cut(line: LineSpec) -> Result<BiInfiniteWord> {
        BiInfiniteWord::line_cut_side(line, PathSide::Lower)
    }

    pub fn line_cut_side(line: LineSpec, side: PathSide) -> Result<BiInfiniteWord> {
        if !line.slope.is_irrational() {
            return Err(Error::Parse(
                "line cuts need an irrational slope; use periodic:<lower Christoffel word> for rational slopes"
                    .into(),
            ));
        }
        Ok(BiInfiniteWord::LineCut { line, side })
    }

    pub fn letter_at(&self, i: i64) -> Result<Letter> {
        Ok(match self {
            BiInfiniteWord::Periodic { period, phase } => {
                let p = period.len() as i64;
                period.letters()[(i + *phase as i64).rem_euclid(p) as usize]
            }
            BiInfiniteWord::Spliced { source, x, y } => match i {
                0 => *x,
                1 => *y,
                i if i >= 2 => source.letter_at((i - 2) as u64)?,
                i => source.letter_at((-i - 1) as u64)?,
            },
            BiInfiniteWord::DoublyEventuallyPeriodic {
                left,
                center,
                right,
            } => {
                let c = center.len() as i64;
                if i < 0 {
                    left.letters()[i.rem_euclid(left.len() as i64) as usize]
                } else if i < c {
                    center.letters()[i as usize]
                } else {
                    right.letters()[((i - c) % right.len() as i64) as usize]
                }
            }
            BiInfiniteWord::LineCut { line, side } => line.letter_at(i, *side)?,
        })
    }

    /// Letters at `[from, to)`.
    pub fn window(&self, from: i64, to: i64) -> Result<Word> {
        if from > to {
            return Err(Error::InvalidRange { from, to });
        }
        if let BiInfiniteWord::LineCut { line, side } = self {
            return crate::line::mechanical_window_side(line, from, to, *side);
        }
        (from..to).map(|i| self.letter_at(i)).collect()
    }

    /// The reversal `s̃`, re-indexed so that `reversal(s)[i] = s[c - i]` with
    /// `c = 0` (periodic), `1` (spliced), `|center| - 1` (doubly eventually
    /// periodic) and `-1` (line cuts). See [`BiInfiniteWord::reversal_offset`].
    pub fn reversal(&self) -> BiInfiniteWord {
        match self {
            BiInfiniteWord::Periodic { period, phase } => {
                let p = period.len();
                BiInfiniteWord::Periodic {
                    period: period.reverse(),
                    phase: (p - 1 - phase) % p,
                }
            }
            BiInfiniteWord::Spliced { source, x, y } => BiInfiniteWord::Spliced {
                source: source.clone(),
                x: *y,
                y: *x,
            },
            BiInfiniteWord::DoublyEventuallyPeriodic {
                left,
                center,
                right,
            } => BiInfiniteWord::DoublyEventuallyPeriodic {
                left: right.reverse(),
                center: center.reverse(),
                right: left.reverse(),
            },
            BiInfiniteWord::LineCut { line, side } => {
                // s_{-1-i} = ⌈α(i+1) - β⌉ - ⌈αi - β⌉: the other-side path of the line with intercept -β.
                let mirrored = LineSpec::new(line.slope.clone(), -line.intercept.clone());
                BiInfiniteWord::LineCut {
                    line: mirrored,
                    side: match side {
                        PathSide::Lower => PathSide::Upper,
                        PathSide::Upper => PathSide::Lower,
                    },
                }
            }
        }
    }

    /// The constant `c` with `reversal(s)[i] = s[c - i]`.
    pub fn reversal_offset(&self) -> i64 {
        match self {
            BiInfiniteWord::Periodic { .. } => 0,
            BiInfiniteWord::Spliced { .. } => 1,
            BiInfiniteWord::DoublyEventuallyPeriodic { center, .. } => center.len() as i64 - 1,
            BiInfiniteWord::LineCut { .. } => -1,
        }
    }

    /// Size of the finite description, used to scale default check spans.
    pub fn description_size(&self) -> usize {
        match self {
            BiInfiniteWord::Periodic { period, .. } => period.len(),
            BiInfiniteWord::Spliced { source, .. } => {
                2 + match source {
                    RightInfinite::Periodic(p) => p.len(),
                    RightInfinite::Line(l) => line_size(l),
                }
            }
            BiInfiniteWord::DoublyEventuallyPeriodic {
                left,
                center,
                right,
            } => left.len() + center.len() + right.len(),
            BiInfiniteWord::LineCut { line, .. } => line_size(line),
        }
    }

    /// Spliced words over a periodic `u` are doubly eventually periodic;
    /// this rewrites them that way. Other variants are returned unchanged.
    pub fn normalized(&self) -> BiInfiniteWord {
        match self {
            BiInfiniteWord::Spliced {
                source: RightInfinite::Periodic(p),
                x,
                y,
            } => BiInfiniteWord::DoublyEventuallyPeriodic {
                left: p.reverse(),
                center: Word::new(vec![*x, *y]),
                right: p.clone(),
            },
            other => other.clone(),
        }
    }

    /// Whether both one-sided tails are eventually periodic.
    pub fn is_eventually_periodic(&self) -> bool {
        !matches!(
            self.normalized(),
            BiInfiniteWord::LineCut { .. } | BiInfiniteWord::Spliced { .. }
        )
    }
}

fn line_size(l: &LineSpec) -> usize {
    match &l.slope {
        SlopeSpec::Rational(s) => s.len(),
        SlopeSpec::Irrational(cf) => cf.len(),
    }
}

/// `ymx` repeated leftward, `ymy` at the center, `xmy` repeated rightward.
/// `m` must be a Markoff word.
pub fn spliced_b4(m: &Word, x: Letter, y: Letter) -> Result<BiInfiniteWord> {
    if x == y {
        return Err(Error::EqualCutLetters);
    }
    if !crate::markoff::is_markoff_word(m) {
        return Err(Error::NotMarkoff(m.to_string()));
    }
    BiInfiniteWord::doubly_eventually_periodic(m.wrap(y, x), m.wrap(y, y), m.wrap(x, y))
}

/// `···xx y xx···` with `y` at index 0.
pub fn xxyxx_form(x: Letter, y: Letter) -> Result<BiInfiniteWord> {
    if x == y {
        return Err(Error::EqualCutLetters);
    }
    BiInfiniteWord::doubly_eventually_periodic(Word::single(x), Word::single(y), Word::single(x))
}

impl fmt::Display for BiInfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiInfiniteWord::Periodic { period, phase: 0 } => write!(f, "periodic:{period}"),
            BiInfiniteWord::Periodic { period, phase } => {
                write!(f, "periodic:{period};phase={phase}")
            }
            BiInfiniteWord::Spliced { source, x, y } => write!(f, "splice:x={x},y={y},u={source}"),
            BiInfiniteWord::DoublyEventuallyPeriodic {
                left,
                center,
                right,
            } => write!(f, "dep:left={left},center={center},right={right}"),
            BiInfiniteWord::LineCut { line, side } => match side {
                PathSide::Lower => write!(f, "cut:{line}"),
                PathSide::Upper => write!(f, "cut:{line};side=upper"),
            },
        }
    }
}

fn key_values(body: &str) -> Result<Vec<(&str, &str)>> {
    body.split(',')
        .map(str::trim)
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn lookup<'a>(pairs: &[(&str, &'a str)], key: &str) -> Result<&'a str> {
    pairs
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse(format!("missing {key}=")))
}

fn parse_cut(body: &str) -> Result<BiInfiniteWord> {
    let mut side = PathSide::Lower;
    let mut line_parts = Vec::new();
    for part in body.split(';') {
        match part.trim() {
            "side=upper" => side = PathSide::Upper,
            "side=lower" => side = PathSide::Lower,
            other => line_parts.push(other),
        }
    }
    let line: LineSpec = line_parts.join(";").parse()?;
    BiInfiniteWord::line_cut_side(line, side)
}

impl FromStr for BiInfiniteWord {
    type Err = Error;

    /// Accepted forms:
    /// `periodic:aabab`, `periodic:aabab;phase=2`, `b4:m=aa,x=a,y=b`,
    /// `xxyxx:x=a,y=b`, `dep:left=baaa,center=baab,right=aaab`,
    /// `cut:slope=cf:0,1,3,1,1;intercept=1/2`, `splice:x=a,y=b,u=periodic:ab`.
    fn from_str(s: &str) -> Result<BiInfiniteWord> {
        let s = s.trim();
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing representation kind in {s:?}")))?;
        match kind {
            "periodic" => {
                let (period, phase) = match body.split_once(';') {
                    Some((p, ph)) => {
                        let ph = ph
                            .trim()
                            .strip_prefix("phase=")
                            .and_then(|v| v.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad phase {ph:?}")))?;
                        (p, ph)
                    }
                    None => (body, 0),
                };
                BiInfiniteWord::periodic_with_phase(period.trim().parse()?, phase)
            }
            "b4" => {
                let kv = key_values(body)?;
                spliced_b4(
                    &lookup(&kv, "m")?.parse()?,
                    lookup(&kv, "x")?.parse()?,
                    lookup(&kv, "y")?.parse()?,
                )
            }
            "xxyxx" => {
                let kv = key_values(body)?;
                xxyxx_form(lookup(&kv, "x")?.parse()?, lookup(&kv, "y")?.parse()?)
            }
            "dep" => {
                let kv = key_values(body)?;
                BiInfiniteWord::doubly_eventually_periodic(
                    lookup(&kv, "left")?.parse()?,
                    lookup(&kv, "center")?.parse()?,
                    lookup(&kv, "right")?.parse()?,
                )
            }
            "cut" => parse_cut(body),
            "splice" => {
                // u= is last and may itself contain commas.
                let (head, u) = body
                    .split_once("u=")
                    .ok_or_else(|| Error::Parse("splice needs u=...".into()))?;
                let kv = key_values(head.trim().trim_end_matches(','))?;
                let source = match u.trim().split_once(':') {
                    Some(("periodic", p)) => RightInfinite::Periodic(p.trim().parse()?),
                    Some(("cut", l)) => RightInfinite::Line(l.parse()?),
                    _ => return Err(Error::Parse(format!("bad splice source {u:?}"))),
                };
                BiInfiniteWord::spliced(source, lookup(&kv, "x")?.parse()?, lookup(&kv, "y")?.parse()?)
            }
            other => Err(Error::Parse(format!("unknown representation kind {other:?}"))),
        }
    }
}
