//! C ABI over `christoffel-lab`.
//!
//! Every fallible function returns a [`ClStatus`]; results go through out
//! pointers. On failure the message is kept per thread and can be read with
//! [`cl_last_error`]. Handles are opaque and must be released with their
//! `_free` function; strings returned to the caller are released with
//! [`cl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use christoffel_lab::classify::{classify_with, ClassifyConfig, MClass};
use christoffel_lab::spectrum::{sequence_report, spectrum_report, Comparison, TwoSidedSequence, Valuation};
use christoffel_lab::{
    is_central, is_christoffel, is_markoff_word, lower_christoffel, satisfies_markoff_periodic, upper_christoffel,
    BiInfiniteWord, Error, ErrorKind, Slope, Word,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input (bad letters, syntax, non-coprime slope, …).
    InvalidInput = 2,
    /// Well-formed input violating a precondition.
    Domain = 3,
    /// A continued-fraction prefix was too short.
    Precision = 4,
    /// Non-UTF-8 string argument.
    Utf8 = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

/// Result of comparing a value with 3.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClComparison {
    Less = -1,
    Equal = 0,
    Greater = 1,
}

/// Opaque finite word over {a, b}.
pub struct ClWord(Word);

/// Opaque bi-infinite word.
pub struct ClBiInfinite(BiInfiniteWord);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> ClStatus {
    let status = match e.kind() {
        ErrorKind::Input => ClStatus::InvalidInput,
        ErrorKind::Domain => ClStatus::Domain,
        ErrorKind::Precision => ClStatus::Precision,
    };
    set_error(e.to_string());
    status
}

fn null(what: &str) -> ClStatus {
    set_error(format!("{what} is null"));
    ClStatus::NullPointer
}

/// Runs `f`, turning panics into [`ClStatus::Internal`].
fn guard(f: impl FnOnce() -> ClStatus) -> ClStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            ClStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ClStatus> {
    if s.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8".into());
        ClStatus::Utf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message of the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn cl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word over {a, b}.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_word_parse(text: *const c_char, out: *mut *mut ClWord) -> ClStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let s = try_ffi!(read_str(text));
        match s.parse::<Word>() {
            Ok(w) => {
                *out = Box::into_raw(Box::new(ClWord(w)));
                ClStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cl_word_free(w: *mut ClWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of letters, or 0 for NULL.
///
/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cl_word_len(w: *const ClWord) -> usize {
    w.as_ref().map_or(0, |w| w.0.len())
}

/// The word as a new string (free with [`cl_string_free`]); NULL for NULL.
///
/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cl_word_to_string(w: *const ClWord) -> *mut c_char {
    match w.as_ref() {
        Some(w) => into_c_string(w.0.to_string()),
        None => ptr::null_mut(),
    }
}

unsafe fn christoffel(p: u64, q: u64, upper: bool, out: *mut *mut ClWord) -> ClStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        match Slope::new(p, q) {
            Ok(s) => {
                let w = if upper { upper_christoffel(s) } else { lower_christoffel(s) };
                *out = Box::into_raw(Box::new(ClWord(w)));
                ClStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Lower Christoffel word with `p` a's and `q` b's (`gcd(p, q) = 1`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_lower_christoffel(p: u64, q: u64, out: *mut *mut ClWord) -> ClStatus {
    christoffel(p, q, false, out)
}

/// Upper Christoffel word with `p` a's and `q` b's (`gcd(p, q) = 1`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_upper_christoffel(p: u64, q: u64, out: *mut *mut ClWord) -> ClStatus {
    christoffel(p, q, true, out)
}

/// Which word predicate [`cl_word_test`] evaluates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClPredicate {
    Balanced = 0,
    Central = 1,
    Christoffel = 2,
    Palindrome = 3,
    Markoff = 4,
    /// The Markoff condition for the periodic word `w^ω`.
    PeriodicMarkoffCondition = 5,
}

/// Evaluates a predicate on a word.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_word_test(w: *const ClWord, predicate: ClPredicate, out: *mut bool) -> ClStatus {
    guard(|| {
        let Some(w) = w.as_ref() else { return null("w") };
        if out.is_null() {
            return null("out");
        }
        let w = &w.0;
        *out = match predicate {
            ClPredicate::Balanced => w.is_balanced(),
            ClPredicate::Central => is_central(w),
            ClPredicate::Christoffel => is_christoffel(w),
            ClPredicate::Palindrome => w.is_palindrome(),
            ClPredicate::Markoff => is_markoff_word(w),
            ClPredicate::PeriodicMarkoffCondition => match satisfies_markoff_periodic(w) {
                Ok(b) => b,
                Err(e) => return fail(e),
            },
        };
        ClStatus::Ok
    })
}

/// Parses a bi-infinite word, e.g. `periodic:aabab`, `b4:m=aa,x=a,y=b`,
/// `cut:slope=cf:0,1,3,1,1;intercept=1/2`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_biinfinite_parse(text: *const c_char, out: *mut *mut ClBiInfinite) -> ClStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let s = try_ffi!(read_str(text));
        match s.parse::<BiInfiniteWord>() {
            Ok(b) => {
                *out = Box::into_raw(Box::new(ClBiInfinite(b)));
                ClStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cl_biinfinite_free(s: *mut ClBiInfinite) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Letters at indices `[from, to)` as a new word handle.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_biinfinite_window(
    s: *const ClBiInfinite,
    from: i64,
    to: i64,
    out: *mut *mut ClWord,
) -> ClStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("s") };
        if out.is_null() {
            return null("out");
        }
        match s.0.window(from, to) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(ClWord(w)));
                ClStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Class 1–4 (M1–M4). `span` is the checked half-width; 0 selects the default.
///
/// # Safety
/// `s` must be a live handle; `class_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cl_classify(s: *const ClBiInfinite, span: usize, class_out: *mut u32) -> ClStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("s") };
        if class_out.is_null() {
            return null("class_out");
        }
        let cfg = ClassifyConfig {
            span: (span > 0).then_some(span),
        };
        match classify_with(&s.0, &cfg) {
            Ok(label) => {
                *class_out = match label.class {
                    MClass::M1 => 1,
                    MClass::M2 => 2,
                    MClass::M3 => 3,
                    MClass::M4 => 4,
                };
                ClStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

fn comparison(c: Comparison) -> ClComparison {
    match c {
        Comparison::Less => ClComparison::Less,
        Comparison::Equal => ClComparison::Equal,
        Comparison::Greater => ClComparison::Greater,
    }
}

unsafe fn write_report(
    report: christoffel_lab::SpectrumReport,
    vs_3: *mut ClComparison,
    json_out: *mut *mut c_char,
) -> ClStatus {
    if !vs_3.is_null() {
        *vs_3 = comparison(report.vs_3);
    }
    if !json_out.is_null() {
        *json_out = into_c_string(serde_json::to_string(&report).expect("serializable"));
    }
    ClStatus::Ok
}

/// `Λ` of the periodic sequence `period[0..len]^ω` (entries 1 or 2).
/// Writes the comparison with 3 to `vs_3` and, when `json_out` is not NULL,
/// the full report as JSON (free with [`cl_string_free`]).
///
/// # Safety
/// `period` must point to `len` readable values; out pointers may be NULL.
#[no_mangle]
pub unsafe extern "C" fn cl_spectrum_periodic(
    period: *const u32,
    len: usize,
    vs_3: *mut ClComparison,
    json_out: *mut *mut c_char,
) -> ClStatus {
    guard(|| {
        if period.is_null() {
            return null("period");
        }
        let values = std::slice::from_raw_parts(period, len).to_vec();
        if let Some(bad) = values.iter().find(|&&v| !(1..=2).contains(&v)) {
            return fail(Error::Parse(format!("entry {bad} is outside {{1,2}}")));
        }
        let report = TwoSidedSequence::periodic(values).and_then(|s| sequence_report(&s, None));
        match report {
            Ok(r) => write_report(r, vs_3, json_out),
            Err(e) => fail(e),
        }
    })
}

/// Spectrum report of a bi-infinite {a,b} word under the doubling valuation
/// `a ↦ 1,1`, `b ↦ 2,2`.
///
/// # Safety
/// `s` must be a live handle; out pointers may be NULL.
#[no_mangle]
pub unsafe extern "C" fn cl_spectrum_double(
    s: *const ClBiInfinite,
    vs_3: *mut ClComparison,
    json_out: *mut *mut c_char,
) -> ClStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("s") };
        match spectrum_report(&s.0, Valuation::Double) {
            Ok(r) => write_report(r, vs_3, json_out),
            Err(e) => fail(e),
        }
    })
}
