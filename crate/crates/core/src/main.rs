use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use christoffel_lab::classify::{classify_with, ClassifyConfig};
use christoffel_lab::enumerate::{enumerate_all, HARD_LIMIT};
use christoffel_lab::markoff::periodic_violation;
use christoffel_lab::report::Report;
use christoffel_lab::spectrum::{parse_period, sequence_report, spectrum_report, TwoSidedSequence, Valuation};
use christoffel_lab::svg::{christoffel_scene, render_svg, two_ray_scene};
use christoffel_lab::{
    is_balanced_periodic, is_central, is_christoffel, is_markoff_word, lower_christoffel, slope_of,
    spliced_b4, upper_christoffel, BiInfiniteWord, Error, Letter, LineSpec, PathSide, Result, Slope, SlopeSpec,
    Which, Word,
};

const MAX_LEN_ENV: &str = "CHRISTOFFEL_LAB_MAX_LEN";

#[derive(Parser)]
#[command(name = "christoffel-lab", version, about = "Christoffel words, central words and the Markoff condition")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower (or upper) Christoffel word with `p` a's and `q` b's.
    Christoffel {
        p: u64,
        q: u64,
        #[arg(long)]
        upper: bool,
        /// Write the lattice path and its segment as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Test a finite word against one predicate.
    Check {
        word: String,
        #[command(flatten)]
        predicate: Predicate,
    },
    /// Decide the Markoff condition and balance for a periodic word.
    Periodic {
        period: String,
        #[arg(long)]
        classify: bool,
    },
    /// The word ···(ymx)(ymx)(ymy)(xmy)(xmy)··· for a Markoff word m.
    B4 {
        m: String,
        x: Letter,
        y: Letter,
        /// Half-open index range `lo..hi`.
        #[arg(long, default_value = "-8..8", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exhaustive equivalence checks over all words up to a length.
    Enumerate {
        #[arg(long, default_value_t = 14)]
        max_len: usize,
        /// Also write the JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Longest period for the periodic balance check (at most 12 by default).
        #[arg(long, default_value_t = 12)]
        period_limit: usize,
    },
    /// λ_i and Λ for a {1,2} sequence or a valued {a,b} word.
    Spectrum {
        #[command(flatten)]
        input: SpectrumInput,
        /// `double`, `identity` or `identity:a=2,b=1`.
        #[arg(long)]
        valuation: Option<Valuation>,
    },
    /// Cutting-sequence window of a line.
    Window {
        /// `rise/run` (e.g. `3/5`) or `cf:a0,a1,...`.
        #[arg(long)]
        slope: SlopeSpec,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        intercept: String,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        /// Use the path above the line.
        #[arg(long)]
        upper: bool,
    },
    /// Assign a class M1–M4 to a bi-infinite word.
    Classify {
        /// e.g. `periodic:aabab`, `b4:m=aa,x=a,y=b`, `cut:slope=cf:0,1,3,1;intercept=1/2`.
        word: BiInfiniteWord,
        /// Half-width of the checked window.
        #[arg(long)]
        span: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Predicate {
    #[arg(long)]
    balanced: bool,
    #[arg(long)]
    central: bool,
    #[arg(long)]
    christoffel: bool,
    #[arg(long)]
    palindrome: bool,
    #[arg(long)]
    markoff: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpectrumInput {
    /// Comma-separated period over {1,2}, e.g. `2,2,1,1`.
    #[arg(long)]
    period: Option<String>,
    /// Periodic word over {a,b}; valued with --valuation (default double).
    #[arg(long)]
    word: Option<String>,
    /// Any bi-infinite word representation, valued with --valuation.
    #[arg(long)]
    biinfinite: Option<BiInfiniteWord>,
}

/// Text for humans, JSON for machines.
struct Outcome {
    text: String,
    inputs: Value,
    results: Value,
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("range {s:?} is not of the form lo..hi")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad range bound {t:?}")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(Error::InvalidRange { from: lo, to: hi });
    }
    Ok((lo, hi))
}

fn write_svg(path: &PathBuf, doc: &str) -> Result<()> {
    std::fs::write(path, doc).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn cmd_christoffel(p: u64, q: u64, upper: bool, svg: Option<PathBuf>) -> Result<Outcome> {
    let slope = Slope::new(p, q)?;
    let (which, word) = if upper {
        (Which::Upper, upper_christoffel(slope))
    } else {
        (Which::Lower, lower_christoffel(slope))
    };
    if let Some(path) = &svg {
        write_svg(path, &render_svg(&christoffel_scene(slope, which, true))?)?;
    }
    Ok(Outcome {
        text: word.to_string(),
        inputs: json!({"p": p, "q": q, "upper": upper, "svg": svg}),
        results: json!({"word": word}),
    })
}

fn cmd_check(word: &str, pred: &Predicate) -> Result<Outcome> {
    let w = parse_word(word)?;
    let (name, verdict, witness) = if pred.balanced {
        let pair = w.unbalanced_pair();
        ("balanced", pair.is_none(), pair.map(|(u, v)| json!([u, v])))
    } else if pred.central {
        let ok = is_central(&w);
        let witness = if ok {
            None
        } else {
            [w.wrap(Letter::A, Letter::B), w.wrap(Letter::B, Letter::A)]
                .iter()
                .find_map(|v| v.unbalanced_pair())
                .map(|(u, v)| json!([u, v]))
        };
        ("central", ok, witness)
    } else if pred.christoffel {
        let ok = is_christoffel(&w);
        let witness = if ok && w.len() >= 2 {
            Some(json!({"central": w.slice(1, w.len() - 1), "slope": slope_of(&w).map(|s| [s.p(), s.q()])}))
        } else {
            None
        };
        ("christoffel", ok, witness)
    } else if pred.palindrome {
        ("palindrome", w.is_palindrome(), None)
    } else {
        let ok = is_markoff_word(&w);
        let witness = if ok {
            None
        } else {
            let period = w.wrap(Letter::A, Letter::B);
            periodic_violation(&period)?
                .map(|(j, m)| json!({"period": period, "cut_index": j, "forbidden_m": m}))
        };
        ("markoff", ok, witness)
    };
    let mut text = verdict.to_string();
    if let Some(wit) = &witness {
        text.push_str(&format!("\nwitness: {wit}"));
    }
    Ok(Outcome {
        text,
        inputs: json!({"word": w, "predicate": name}),
        results: json!({"verdict": verdict, "witness": witness}),
    })
}

fn cmd_periodic(period: &str, classify: bool) -> Result<Outcome> {
    let p = parse_word(period)?;
    let s = BiInfiniteWord::periodic(p.clone())?;
    let violation = periodic_violation(&p)?;
    let balanced = is_balanced_periodic(&p)?;
    let mut text = match &violation {
        None => "holds".to_string(),
        Some((j, m)) => format!("fails at cut {j}, witness m={:?}", m.to_string()),
    };
    text.push_str(&format!("\nbalanced: {balanced}"));
    let label = if classify && violation.is_none() {
        let l = classify_with(&s, &ClassifyConfig::default())?;
        text.push_str(&format!("\nclass: {}", l.class));
        Some(l)
    } else {
        None
    };
    Ok(Outcome {
        text,
        inputs: json!({"period": p, "classify": classify}),
        results: json!({
            "condition": if violation.is_none() { "holds" } else { "fails" },
            "cut_index": violation.as_ref().map(|v| v.0),
            "witness_m": violation.as_ref().map(|v| v.1.clone()),
            "balanced": balanced,
            "class": label,
        }),
    })
}

fn cmd_b4(m: &str, x: Letter, y: Letter, window: &str, svg: Option<PathBuf>) -> Result<Outcome> {
    let m = parse_word(m)?;
    let (lo, hi) = parse_range(window)?;
    let s = spliced_b4(&m, x, y)?;
    let w = s.window(lo, hi)?;
    let label = classify_with(&s, &ClassifyConfig::default())?;
    if let Some(path) = &svg {
        write_svg(path, &render_svg(&two_ray_scene(&s, 2, true)?)?)?;
    }
    Ok(Outcome {
        text: format!("…{w}…\nclass: {}", label.class),
        inputs: json!({"m": m, "x": x.to_string(), "y": y.to_string(), "window": [lo, hi], "svg": svg}),
        results: json!({"word": s.to_string(), "window": w, "class": label}),
    })
}

fn enumeration_bound() -> Result<usize> {
    match std::env::var(MAX_LEN_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_LEN_ENV}={v:?} is not a length"))),
        Err(_) => Ok(HARD_LIMIT),
    }
}

fn cmd_enumerate(max_len: usize, period_limit: usize) -> Result<Outcome> {
    let rows = enumerate_all(max_len, enumeration_bound()?, period_limit)?;
    let failures: usize = rows.iter().map(|r| r.failures.len()).sum();
    let mut text = String::from("n\tcentral\tmarkoff\tchristoffel\ttotient(n+2)\tperiods\tfailures\n");
    for r in &rows {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.central,
            r.markoff,
            r.christoffel,
            r.totient,
            r.periods_checked,
            r.failures.len()
        ));
    }
    text.push_str(&format!("total failures: {failures}"));
    Ok(Outcome {
        text,
        inputs: json!({"max_len": max_len, "period_limit": period_limit}),
        results: json!({"rows": rows, "total_failures": failures}),
    })
}

fn cmd_spectrum(input: &SpectrumInput, valuation: Option<Valuation>) -> Result<Outcome> {
    let report = match (&input.period, &input.word, &input.biinfinite) {
        (Some(p), _, _) => sequence_report(&TwoSidedSequence::periodic(parse_period(p)?)?, valuation)?,
        (_, Some(w), _) => spectrum_report(
            &BiInfiniteWord::periodic(parse_word(w)?)?,
            valuation.unwrap_or(Valuation::Double),
        )?,
        (_, _, Some(s)) => spectrum_report(s, valuation.unwrap_or(Valuation::Double))?,
        _ => unreachable!("clap requires one input"),
    };
    let mut text = String::from("i\tλ_i\tdecimal\n");
    for row in &report.lambdas {
        text.push_str(&format!("{}\t{}\t{}\n", row.index, row.value.display, row.value.decimal));
    }
    text.push_str(&format!(
        "Λ = {} ≈ {}\nvs 3: {}",
        report.lambda_sup.display, report.lambda_sup.decimal, report.vs_3
    ));
    if !report.indices_equal_3.is_empty() {
        text.push_str(&format!("\nλ_i = 3 at {:?}", report.indices_equal_3));
    }
    if report.informational {
        text.push_str("\n(informational: class correspondence is read under the doubling valuation only)");
    } else if let Some(c) = report.spectral_class() {
        text.push_str(&format!("\nspectral class: {c}"));
    }
    let inputs = json!({
        "period": input.period,
        "word": input.word,
        "biinfinite": input.biinfinite.as_ref().map(|s| s.to_string()),
        "valuation": valuation.map(|v| v.to_string()),
    });
    let mut results = serde_json::to_value(&report).expect("serializable");
    results["spectral_class"] = json!(report.spectral_class());
    Ok(Outcome { text, inputs, results })
}

fn cmd_window(slope: SlopeSpec, intercept: &str, from: i64, to: i64, upper: bool) -> Result<Outcome> {
    let beta = christoffel_lab::line::parse_rational(intercept)?;
    let line = LineSpec::new(slope, beta);
    let side = if upper { PathSide::Upper } else { PathSide::Lower };
    let w = christoffel_lab::mechanical_window_side(&line, from, to, side)?;
    let balanced = w.is_balanced();
    Ok(Outcome {
        text: w.to_string(),
        inputs: json!({"line": line.to_string(), "from": from, "to": to, "side": side}),
        results: json!({"window": w, "balanced": balanced}),
    })
}

fn cmd_classify(word: &BiInfiniteWord, span: Option<usize>) -> Result<Outcome> {
    let label = classify_with(word, &ClassifyConfig { span })?;
    Ok(Outcome {
        text: format!("{}\n{}", label.class, label.evidence.join("\n")),
        inputs: json!({"word": word.to_string(), "span": span}),
        results: json!(label),
    })
}

fn run(cli: &Cli) -> Result<(String, Outcome)> {
    Ok(match &cli.command {
        Command::Christoffel { p, q, upper, svg } => ("christoffel".into(), cmd_christoffel(*p, *q, *upper, svg.clone())?),
        Command::Check { word, predicate } => ("check".into(), cmd_check(word, predicate)?),
        Command::Periodic { period, classify } => ("periodic".into(), cmd_periodic(period, *classify)?),
        Command::B4 { m, x, y, window, svg } => ("b4".into(), cmd_b4(m, *x, *y, window, svg.clone())?),
        Command::Enumerate { max_len, period_limit, .. } => ("enumerate".into(), cmd_enumerate(*max_len, *period_limit)?),
        Command::Spectrum { input, valuation } => ("spectrum".into(), cmd_spectrum(input, *valuation)?),
        Command::Window {
            slope,
            intercept,
            from,
            to,
            upper,
        } => ("window".into(), cmd_window(slope.clone(), intercept, *from, *to, *upper)?),
        Command::Classify { word, span } => ("classify".into(), cmd_classify(word, *span)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((command, outcome)) => {
            let report = Report::new(
                &command,
                outcome.inputs,
                outcome.results,
                start.elapsed().as_millis() as u64,
            );
            if let Command::Enumerate { report: Some(path), .. } = &cli.command {
                if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{}", outcome.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
