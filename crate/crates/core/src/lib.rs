//! Balanced words, central and Christoffel words, and the Markoff condition
//! on bi-infinite binary words, with exact continued-fraction spectra.
//!
//! ```
//! use christoffel_lab::{lower_christoffel, is_markoff_word, is_central, Slope, Word};
//!
//! let w = lower_christoffel(Slope::new(5, 3).unwrap());
//! assert_eq!(w.to_string(), "aabaabab");
//! let m: Word = "abaaba".parse().unwrap();
//! assert!(is_central(&m) && is_markoff_word(&m));
//! ```

pub mod biinfinite;
pub mod christoffel;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod line;
pub mod markoff;
pub mod report;
pub mod spectrum;
pub mod surd;
pub mod svg;
pub mod word;

pub use biinfinite::{spliced_b4, xxyxx_form, BiInfiniteWord, RightInfinite};
pub use christoffel::{
    central_of, christoffel_path, enumerate_central, enumerate_central_bounded, is_central, is_christoffel,
    lower_christoffel, slope_of, totient, upper_christoffel, LatticePath, Slope, Step, Which,
    DEFAULT_ENUMERATION_BOUND,
};
pub use classify::{classify, classify_with, ClassLabel, ClassifyConfig, MClass};
pub use error::{Error, ErrorKind, Result};
pub use line::{mechanical_window, mechanical_window_side, CfPrefix, LineSpec, PathSide, SlopeSpec};
pub use markoff::{
    forbidden_factor_scan, is_balanced_periodic, is_markoff_word, markoff_factors, markoff_scan_at_cut,
    markoff_scan_at_cut_in_word, mirror_cut, satisfies_markoff_periodic, Verdict3, VerdictReport,
};
pub use spectrum::{
    cf_value, compare_to_3, double_valuation, identity_valuation, lambda_i, lambda_sup, spectrum_report,
    Comparison, PartialQuotients, SpectrumReport, TwoSidedSequence, Valuation,
};
pub use surd::QuadraticSurd;
pub use word::{Letter, Word};
