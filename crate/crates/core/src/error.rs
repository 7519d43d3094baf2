use thiserror::Error;

/// Coarse category of a failure; the CLI maps these onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: bad letters, bad syntax, out-of-range parameters.
    Input,
    /// Well-formed input that violates a mathematical precondition.
    Domain,
    /// A continued-fraction prefix was too short to decide a floor.
    Precision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {found:?} at position {position}; words use only 'a' and 'b'")]
    InvalidLetter { found: char, position: usize },

    #[error("slope ({p}, {q}) is not coprime (gcd = {gcd})")]
    NonCoprime { p: u64, q: u64, gcd: u64 },

    #[error("slope (0, 0) does not define a path")]
    ZeroSlope,

    #[error("slope ({p}, {q}) has no interior word; both coordinates must be positive")]
    DegenerateSlope { p: u64, q: u64 },

    #[error("length {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error(
        "continued-fraction prefix of {terms_supplied} terms cannot resolve index {index}; \
         supply at least {extra_terms_hint} more term(s)"
    )]
    InsufficientPrecision {
        index: i64,
        terms_supplied: usize,
        extra_terms_hint: usize,
    },

    #[error("period must be non-empty")]
    EmptyPeriod,

    #[error("letters at {index} and {} are equal; there is no cut there", .index + 1)]
    NoCutAt { index: i64 },

    #[error("{0:?} is not a Markoff word")]
    NotMarkoff(String),

    #[error("cut letters must differ")]
    EqualCutLetters,

    #[error("the Markoff condition fails at cut {cut_index} (m = {witness_m:?})")]
    ConditionViolated { cut_index: i64, witness_m: String },

    #[error("cannot classify: {0}")]
    Unresolvable(String),

    #[error("the two one-sided tails at index {index} are not eventually periodic")]
    NotEventuallyPeriodic { index: i64 },

    #[error("cannot add surds over different radicands √{0} and √{1}")]
    IncompatibleRadicands(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("empty range {from}..{to}")]
    InvalidRange { from: i64, to: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidLetter { .. }
            | Error::NonCoprime { .. }
            | Error::ZeroSlope
            | Error::BoundExceeded { .. }
            | Error::EmptyPeriod
            | Error::EqualCutLetters
            | Error::InvalidRange { .. }
            | Error::Parse(_) => ErrorKind::Input,
            Error::InsufficientPrecision { .. } => ErrorKind::Precision,
            Error::DegenerateSlope { .. }
            | Error::NoCutAt { .. }
            | Error::NotMarkoff(_)
            | Error::ConditionViolated { .. }
            | Error::Unresolvable(_)
            | Error::NotEventuallyPeriodic { .. }
            | Error::IncompatibleRadicands(..)
            | Error::DivisionByZero => ErrorKind::Domain,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Input => 2,
            ErrorKind::Domain => 3,
            ErrorKind::Precision => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
