use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input samples themselves are unusable (I/O, parsing, spacing, NaN).
    Data,
    /// The samples are fine but the requested method cannot run on them.
    Precondition,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("sample {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("interval is empty or reversed: a = {a}, b = {b}")]
    EmptyInterval { a: f64, b: f64 },

    #[error("non-uniform spacing at row {row}: gap {gap} differs from mean gap {mean}")]
    NonUniformSpacing { row: usize, gap: f64, mean: f64 },

    #[error("x values must be strictly increasing (row {row})")]
    NotIncreasing { row: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("part size {m} does not divide n = {n}")]
    NotDivisor { m: usize, n: usize },

    #[error("part size {m} is outside [{min}, {n}]")]
    PartSizeOutOfRange { m: usize, min: usize, n: usize },

    #[error("{method} needs n >= {required}, got n = {n}")]
    DegenerateGrid {
        method: &'static str,
        n: usize,
        required: usize,
    },

    #[error("Simpson's rule needs an even number of subintervals, got n = {0}")]
    OddSubintervals(usize),

    #[error("Simpson's 3/8 rule needs n divisible by 3, got n = {0}")]
    NotMultipleOfThree(usize),

    #[error("Romberg integration needs n to be a power of two, got n = {0}")]
    NotPowerOfTwo(usize),

    #[error("extrapolation factor ({num}/{den})^2 equals 1")]
    DegenerateFactor { num: usize, den: usize },

    #[error("ordering must start with n = {n}, got {first}")]
    OrderingStart { n: usize, first: usize },

    #[error("ordering is empty")]
    EmptyOrdering,

    #[error("ordering repeats part size {0}")]
    RepeatedOrdering(usize),

    #[error("ordering entry {m} is not a feasible part size for n = {n}")]
    InfeasibleOrdering { m: usize, n: usize },

    #[error("ordering preset needs {requirement}, got n = {n}")]
    PresetUnavailable { requirement: &'static str, n: usize },

    #[error("function `{0}` has no analytic third derivative")]
    MissingThirdDerivative(String),

    #[error("unknown catalog function `{0}`")]
    UnknownFunction(String),

    #[error("study grid sizes must be strictly ascending and non-empty")]
    StudyOrder,

    #[error("{method} cannot run on n = {n}: {reason}")]
    StudyGrid {
        method: String,
        n: usize,
        reason: &'static str,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::TooFewSamples(_)
            | Error::NonFinite { .. }
            | Error::EmptyInterval { .. }
            | Error::NonUniformSpacing { .. }
            | Error::NotIncreasing { .. }
            | Error::Parse { .. }
            | Error::Io(_) => ErrorKind::Data,
            _ => ErrorKind::Precondition,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        let line = err.position().map(|p| p.line() as usize).unwrap_or(0);
        match err.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Parse {
                line,
                message: format!("{other:?}"),
            },
        }
    }
}
