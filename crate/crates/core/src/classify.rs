//! The four classes M1–M4 of bi-infinite words satisfying the Markoff
//! condition.
//!
//! Eventually periodic representations are decided exactly. Line cuts and
//! splices over a line carry their class in the constructor parameters; for
//! those only a finite window is checked, and the evidence says so.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::biinfinite::{BiInfiniteWord, RightInfinite};
use crate::error::{Error, Result};
use crate::markoff::{exact_radius, forbidden_cut_index, forbidden_factor_scan, mirror_cut, periodic_violation};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MClass {
    /// Markoff words occurring in `s` have bounded length.
    M1,
    /// Unbounded Markoff words, no mirror cut.
    M2,
    /// Exactly one mirror cut.
    M3,
    /// At least two mirror cuts.
    M4,
}

impl fmt::Display for MClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub class: MClass,
    pub evidence: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyConfig {
    /// Half-width of the checked window; `None` means 6× the description size.
    pub span: Option<usize>,
}

impl ClassifyConfig {
    pub fn with_span(span: usize) -> ClassifyConfig {
        ClassifyConfig { span: Some(span) }
    }

    fn span_for(&self, s: &BiInfiniteWord) -> usize {
        self.span.unwrap_or(6 * s.description_size()).max(1)
    }
}

pub fn classify(s: &BiInfiniteWord) -> Result<ClassLabel> {
    classify_with(s, &ClassifyConfig::default())
}

pub fn classify_with(s: &BiInfiniteWord, cfg: &ClassifyConfig) -> Result<ClassLabel> {
    match s.normalized() {
        BiInfiniteWord::Periodic { period, .. } => classify_periodic(&period, Vec::new()),
        BiInfiniteWord::DoublyEventuallyPeriodic { left, center, right } => {
            classify_dep(s, &left, &center, &right, cfg)
        }
        BiInfiniteWord::Spliced { source, .. } => {
            let span = cfg.span_for(s) as i64;
            let mut evidence = vec![window_check(s, -span, span)?];
            if mirror_cut(s, 0, 1)? != Some(true) {
                return Err(Error::Unresolvable("splice cut is not a mirror cut".into()));
            }
            evidence.push("mirror cut at the splice (indices 0, 1): both sides read the same u".into());
            let source_desc = match &source {
                RightInfinite::Line(l) => format!("u is the cutting sequence of {l}"),
                RightInfinite::Periodic(p) => format!("u = ({p})^ω"),
            };
            evidence.push(format!(
                "{source_desc}, which is aperiodic, so no other cut can be a mirror cut (by construction)"
            ));
            Ok(ClassLabel { class: MClass::M3, evidence })
        }
        BiInfiniteWord::LineCut { line, .. } => {
            let span = cfg.span_for(s) as i64;
            let mut evidence = vec![window_check(s, -span, span)?];
            if line.intercept.is_integer() {
                if mirror_cut(s, -1, 1)? != Some(true) {
                    return Err(Error::Unresolvable("expected a mirror cut at -1".into()));
                }
                evidence.push(format!(
                    "irrational slope with integer intercept {}: the line meets a lattice point, \
                     giving exactly one mirror cut (indices -1, 0)",
                    line.intercept
                ));
                Ok(ClassLabel { class: MClass::M3, evidence })
            } else {
                evidence.push(format!(
                    "irrational slope with non-integer intercept {}: the line avoids lattice points, \
                     so there is no mirror cut and Markoff factors are unbounded (by construction)",
                    line.intercept
                ));
                Ok(ClassLabel { class: MClass::M2, evidence })
            }
        }
    }
}

fn window_check(s: &BiInfiniteWord, from: i64, to: i64) -> Result<String> {
    let w = s.window(from, to)?;
    if let Some((start, m)) = forbidden_factor_scan(&w).into_iter().next() {
        return Err(Error::ConditionViolated {
            cut_index: from + forbidden_cut_index(start, &m) as i64,
            witness_m: m.to_string(),
        });
    }
    Ok(format!(
        "no forbidden factor in the window [{from}, {to}) ({} letters); the global condition is not decidable from finite data",
        w.len()
    ))
}

fn classify_periodic(period: &Word, mut evidence: Vec<String>) -> Result<ClassLabel> {
    if let Some((j, m)) = periodic_violation(period)? {
        return Err(Error::ConditionViolated {
            cut_index: j,
            witness_m: m.to_string(),
        });
    }
    let p = period.len();
    evidence.push(format!("({period})^ω satisfies the condition (every cut scanned exactly)"));
    let s = BiInfiniteWord::periodic(period.clone())?;
    let mut mirrors = Vec::new();
    for j in 0..p as i64 {
        if s.letter_at(j)? != s.letter_at(j + 1)? && mirror_cut(&s, j, exact_radius(&s, j))? == Some(true) {
            mirrors.push(j);
        }
    }
    if mirrors.is_empty() {
        evidence.push(format!(
            "no mirror cut among the {p} residues; Markoff words are bounded since a periodic word has finitely many factors of each conjugacy pattern"
        ));
        Ok(ClassLabel { class: MClass::M1, evidence })
    } else {
        evidence.push(format!(
            "mirror cut(s) at {mirrors:?} modulo {p}; each recurs every period, so there are infinitely many"
        ));
        Ok(ClassLabel { class: MClass::M4, evidence })
    }
}

fn classify_dep(s: &BiInfiniteWord, left: &Word, center: &Word, right: &Word, cfg: &ClassifyConfig) -> Result<ClassLabel> {
    let s = s.normalized();
    let l = left.len().lcm(&right.len()) as i64;
    let c = center.len() as i64;
    // periodic with period lcm iff it holds across the center
    let mut periodic = true;
    for i in -l..c {
        if s.letter_at(i)? != s.letter_at(i + l)? {
            periodic = false;
            break;
        }
    }
    if periodic {
        let period = s.window(0, l)?;
        return classify_periodic(
            &period,
            vec![format!("the representation is purely periodic with period {l}")],
        );
    }
    // Deep cuts repeat with period lcm on each side, so this range is exhaustive.
    let reach = (cfg.span_for(&s) as i64).max(2 * l + c + 2);
    let mut mirrors = Vec::new();
    for j in -reach..c + reach {
        if s.letter_at(j)? == s.letter_at(j + 1)? {
            continue;
        }
        let radius = exact_radius(&s, j);
        match crate::markoff::markoff_scan_at_cut(&s, j, radius)? {
            crate::markoff::Verdict3::FailsAt { cut_index, witness_m } => {
                return Err(Error::ConditionViolated {
                    cut_index,
                    witness_m: witness_m.to_string(),
                })
            }
            crate::markoff::Verdict3::Inconclusive { cut_index } => {
                return Err(Error::Unresolvable(format!("cut {cut_index} did not resolve")))
            }
            crate::markoff::Verdict3::Holds => {}
        }
        if mirror_cut(&s, j, radius)? == Some(true) {
            mirrors.push(j);
        }
    }
    let mut evidence = vec![format!(
        "eventually periodic on both sides; every cut in [{}, {}) scanned exactly",
        -reach,
        c + reach
    )];
    match mirrors.len() {
        0 => Err(Error::Unresolvable(
            "eventually periodic, not periodic, and no mirror cut".into(),
        )),
        1 => {
            evidence.push(format!("exactly one mirror cut, at {}", mirrors[0]));
            Ok(ClassLabel { class: MClass::M3, evidence })
        }
        _ => {
            evidence.push(format!("mirror cuts at {mirrors:?}"));
            Ok(ClassLabel { class: MClass::M4, evidence })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biinfinite::{spliced_b4, xxyxx_form};
    use crate::word::{w, Letter};

    fn class(s: &str) -> Result<MClass> {
        classify(&s.parse::<BiInfiniteWord>().unwrap()).map(|l| l.class)
    }

    #[test]
    fn examples() {
        assert_eq!(class("periodic:aabab").unwrap(), MClass::M1);
        assert_eq!(class("periodic:ab").unwrap(), MClass::M1);
        assert_eq!(class("periodic:a").unwrap(), MClass::M1);
        assert_eq!(class("b4:m=aa,x=a,y=b").unwrap(), MClass::M4);
        assert_eq!(class("xxyxx:x=a,y=b").unwrap(), MClass::M4);
        assert_eq!(class("cut:slope=cf:0,1,3,1,1,7,4,2,3,1,1,5;intercept=0").unwrap(), MClass::M3);
        assert_eq!(class("cut:slope=cf:0,1,3,1,1,7,4,2,3,1,1,5;intercept=1/2").unwrap(), MClass::M2);
        assert!(matches!(class("periodic:aabb"), Err(Error::ConditionViolated { .. })));
    }

    #[test]
    fn b4_family_is_m4() {
        for m in ["", "a", "aa", "aba", "aaa"] {
            let s = spliced_b4(&w(m), Letter::A, Letter::B).unwrap();
            let label = classify(&s).unwrap();
            assert_eq!(label.class, MClass::M4, "m = {m:?}: {:?}", label.evidence);
        }
        let s = xxyxx_form(Letter::B, Letter::A).unwrap();
        assert_eq!(classify(&s).unwrap().class, MClass::M4);
    }

    #[test]
    fn dep_that_is_periodic() {
        let s = BiInfiniteWord::doubly_eventually_periodic(w("ab"), w("ab"), w("ab")).unwrap();
        let label = classify(&s).unwrap();
        assert_eq!(label.class, MClass::M1);
        assert!(label.evidence[0].contains("purely periodic"));
    }

    #[test]
    fn splice_window_check_catches_violations() {
        // an arbitrary u does not make ũ·ab·u satisfy the condition
        let s: BiInfiniteWord = "splice:x=a,y=b,u=cut:slope=cf:0,1,3,1,1,7,4,2,3,1,1,5;intercept=1/2"
            .parse()
            .unwrap();
        assert!(matches!(
            classify_with(&s, &ClassifyConfig::with_span(20)),
            Err(Error::ConditionViolated { .. })
        ));
    }
}
