//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::time::Instant;

use christoffel_lab::markoff::window_violation;
use christoffel_lab::spectrum::{cf_value, sequence_report, PartialQuotients};
use christoffel_lab::{
    christoffel_path, classify, classify_with, compare_to_3, enumerate_central, forbidden_factor_scan,
    is_balanced_periodic, is_central, is_christoffel, is_markoff_word, lambda_sup, lower_christoffel,
    markoff_factors, markoff_scan_at_cut_in_word, satisfies_markoff_periodic, spliced_b4, upper_christoffel,
    BiInfiniteWord, ClassifyConfig, Comparison, Error, Letter, MClass, QuadraticSurd, Slope, TwoSidedSequence,
    Which, Word,
};

/// π/4 = [0; 1, 3, 1, 1, 1, 15, 2, 72, 1, 9, …]
const PI_4: &str = "cf:0,1,3,1,1,1,15,2,72,1,9,1,17,1,2,1,5,1,1,10,1,2,2,20,1,5,1,1,1,3";

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_words(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(Word::all_of_length)
}

fn figure_one() -> Result<(), String> {
    let s = Slope::new(5, 3).map_err(|e| e.to_string())?;
    ensure(lower_christoffel(s).to_string() == "aabaabab", || "lower(5,3)".into())?;
    ensure(upper_christoffel(s).to_string() == "babaabaa", || "upper(5,3)".into())
}

fn markoff_words_are_central() -> Result<(), String> {
    let mut checked = 0;
    for m in all_words(14) {
        ensure(is_markoff_word(&m) == is_central(&m), || format!("mismatch at {m:?}"))?;
        checked += 1;
    }
    ensure(checked == (1 << 15) - 1, || format!("checked {checked} words"))
}

fn christoffel_iff_central() -> Result<(), String> {
    for m in all_words(14) {
        let w = m.wrap(Letter::A, Letter::B);
        ensure(is_christoffel(&w) == is_central(&m), || format!("mismatch at {m:?}"))?;
    }
    Ok(())
}

fn condition_iff_balanced() -> Result<(), String> {
    for n in 1..=12 {
        for p in Word::all_of_length(n) {
            let cond = satisfies_markoff_periodic(&p).map_err(|e| e.to_string())?;
            let bal = is_balanced_periodic(&p).map_err(|e| e.to_string())?;
            ensure(cond == bal, || format!("({p})^ω: condition {cond}, balanced {bal}"))?;
        }
    }
    Ok(())
}

fn worked_examples() -> Result<(), String> {
    let e = |e: Error| e.to_string();
    let p = BiInfiniteWord::periodic(w("aabab")).map_err(e)?;
    ensure(satisfies_markoff_periodic(&w("aabab")).map_err(e)?, || "aabab fails".into())?;
    ensure(classify(&p).map_err(e)?.class == MClass::M1, || "aabab not M1".into())?;

    let b4 = spliced_b4(&w("aa"), Letter::A, Letter::B).map_err(e)?;
    ensure(classify(&b4).map_err(e)?.class == MClass::M4, || "b4 not M4".into())?;
    let win = b4.window(-8, 12).map_err(e)?.to_string();
    ensure(win == "baaabaaabaabaaabaaab", || format!("b4 window {win}"))?;

    let cfg = ClassifyConfig::with_span(32);
    for (beta, class) in [("0", MClass::M3), ("1/2", MClass::M2)] {
        let s: BiInfiniteWord = format!("cut:slope={PI_4};intercept={beta}").parse().map_err(e)?;
        let label = classify_with(&s, &cfg).map_err(e)?;
        ensure(label.class == class, || format!("β={beta}: {:?}", label.class))?;
        let v = window_violation(&s, -32, 32).map_err(e)?;
        ensure(v.is_none(), || format!("β={beta}: window violation {v:?}"))?;
        ensure(s.window(-32, 32).map_err(e)?.is_balanced(), || format!("β={beta}: unbalanced window"))?;
    }
    Ok(())
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn palindromic_markoff_words() -> Result<(), String> {
    for n in 0..=16 {
        for c in enumerate_central(n).map_err(|e| e.to_string())? {
            ensure(c.is_palindrome(), || format!("central {c:?} not a palindrome"))?;
        }
    }
    for p in all_words(10).filter(|p| !p.is_empty()) {
        if !satisfies_markoff_periodic(&p).map_err(|e| e.to_string())? {
            continue;
        }
        let window = p.repeat(2 + 40 / p.len());
        for m in markoff_factors(&window) {
            ensure(m.is_palindrome(), || format!("markoff factor {m:?} of ({p})^ω"))?;
        }
    }
    Ok(())
}

/// Euler's φ by counting residues coprime to n.
fn phi_by_gcd(n: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn central_counts() -> Result<(), String> {
    for n in 0..=16usize {
        let count = enumerate_central(n).map_err(|e| e.to_string())?.len() as u64;
        let phi = phi_by_gcd(n as u64 + 2);
        ensure(count == phi, || format!("n={n}: {count} central words, φ = {phi}"))?;
    }
    Ok(())
}

fn geometric_oracle() -> Result<(), String> {
    for total in 2..=20u64 {
        for p in 1..total {
            let q = total - p;
            let Ok(s) = Slope::new(p, q) else { continue };
            let path = christoffel_path(s, Which::Lower);
            ensure(path.word() == lower_christoffel(s), || format!("({p},{q}): path word differs"))?;
            let pts = path.points();
            ensure(pts.iter().all(|&(x, y)| (y as u64) * p <= (x as u64) * q), || {
                format!("({p},{q}): path above segment")
            })?;
            // the lattice point just above the path's top vertex in each column lies above the segment
            for x in 0..=p as i64 {
                let top = pts.iter().filter(|pt| pt.0 == x).map(|pt| pt.1).max().unwrap();
                ensure(((top + 1) as u64) * p > (x as u64) * q, || {
                    format!("({p},{q}): lattice point ({x},{}) between path and segment", top + 1)
                })?;
            }
        }
    }
    Ok(())
}

fn numeric_lambda(period: &[u32], i: usize, terms: usize) -> f64 {
    let n = period.len();
    let cf = |seq: Vec<u32>| seq.iter().rev().fold(0.0, |acc, &a| 1.0 / (a as f64 + acc));
    let right = (1..=terms).map(|k| period[(i + k) % n]).collect();
    let left = (1..=terms).map(|k| period[(i + n * terms - k) % n]).collect();
    period[i] as f64 + cf(right) + cf(left)
}

fn spectrum_values() -> Result<(), String> {
    let e = |e: Error| e.to_string();
    let cases: [(&[u32], QuadraticSurd, f64); 3] = [
        (&[1], QuadraticSurd::sqrt(5).map_err(e)?, 2.2360679),
        (&[2], QuadraticSurd::new(0.into(), 2.into(), 1.into(), 2.into()).map_err(e)?, 2.8284271),
        (&[2, 2, 1, 1], QuadraticSurd::new(0.into(), 1.into(), 5.into(), 221.into()).map_err(e)?, 2.9732137),
    ];
    for (period, expected, prefix) in cases {
        let s = TwoSidedSequence::periodic(period.to_vec()).map_err(e)?;
        let r = sequence_report(&s, None).map_err(e)?;
        let exact = lambda_sup(&s).map_err(e)?;
        ensure(exact == expected, || format!("{period:?}: Λ = {exact}, expected {expected}"))?;
        let oracle = (0..period.len()).map(|i| numeric_lambda(period, i, 50)).fold(f64::MIN, f64::max);
        ensure((exact.to_f64() - oracle).abs() < 1e-12, || format!("{period:?}: oracle {oracle}"))?;
        ensure((oracle - prefix).abs() < 1e-7, || format!("{period:?}: decimal {oracle}"))?;
        ensure(compare_to_3(&exact) == Comparison::Less, || format!("{period:?} not Less"))?;
        ensure(r.vs_3 == Comparison::Less, || "report verdict".into())?;
    }
    let golden = cf_value(&PartialQuotients::new(vec![], vec![1]).map_err(e)?).map_err(e)?;
    let other = cf_value(&PartialQuotients::new(vec![2], vec![1]).map_err(e)?).map_err(e)?;
    let three = QuadraticSurd::from_integer(2).add(&golden).and_then(|v| v.add(&other)).map_err(e)?;
    ensure(compare_to_3(&three) == Comparison::Equal, || format!("identity gives {three}"))
}

fn scan_cross_validation() -> Result<(), String> {
    for p in all_words(8).filter(|p| !p.is_empty()) {
        let long = p.repeat(2 + 24 / p.len() + 1);
        for start in 0..p.len() {
            for len in 0..=24 {
                let win = long.slice(start, start + len);
                let forbidden = !forbidden_factor_scan(&win).is_empty();
                let mut fails = false;
                for j in 0..len.saturating_sub(1) {
                    if win.get(j) == win.get(j + 1) {
                        continue;
                    }
                    if markoff_scan_at_cut_in_word(&win, j).map_err(|e| e.to_string())?.is_failure() {
                        fails = true;
                        break;
                    }
                }
                ensure(forbidden == fails, || {
                    format!("window {win:?} of ({p})^ω: factor scan {forbidden}, cut scan {fails}")
                })?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("Figure 1 golden Christoffel words", figure_one),
        ("Markoff words = central words, all |m| <= 14", markoff_words_are_central),
        ("a·m·b Christoffel <=> m central, all |m| <= 14", christoffel_iff_central),
        ("periodic condition <=> balanced, all periods <= 12", condition_iff_balanced),
        ("worked examples M1, M4 window, M3/M2 line cuts", worked_examples),
        ("central words and Markoff factors are palindromes", palindromic_markoff_words),
        ("central word counts equal totient(n+2), n <= 16", central_counts),
        ("arithmetic word = greedy path, no lattice point skipped", geometric_oracle),
        ("exact spectrum values and the identity = 3", spectrum_values),
        ("forbidden-factor scan agrees with cut scan", scan_cross_validation),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let ms = t.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({ms} ms): {msg}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
