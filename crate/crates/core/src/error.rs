use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the labeling library.
///
/// Positions in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid DNA symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },

    #[error("invalid binary symbol {found:?} at position {position}")]
    InvalidBit { position: usize, found: char },

    #[error("labels must be nonempty")]
    EmptyLabel,

    #[error("duplicate label {0} in codeset")]
    DuplicateLabel(String),

    #[error("duplicate codeset {{{0}}} in labeling code")]
    DuplicateCodeset(String),

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("{name} must be at least {min}, got {value}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("length mismatch: word has length {word}, reference has length {reference}")]
    LengthMismatch { word: usize, reference: usize },

    #[error("word {word} violates the constraint: run of ones of length {run} at position {position} is shorter than {ell}")]
    ConstraintViolation {
        word: String,
        position: usize,
        run: usize,
        ell: usize,
    },

    #[error("reference is not {ell}-repeat-free: window {window} occurs at positions {first} and {second}")]
    NotRepeatFree {
        ell: usize,
        window: String,
        first: usize,
        second: usize,
    },

    #[error("label {label} has length {len}, expected {ell}")]
    LabelLength {
        label: String,
        len: usize,
        ell: usize,
    },

    #[error("message out of range, capacity η({n},{ell})={capacity}")]
    MessageOutOfRange {
        n: usize,
        ell: usize,
        capacity: BigUint,
    },

    #[error("index {index} out of range, code has {size} members")]
    IndexOutOfRange { index: BigUint, size: BigUint },

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("tolerance must be positive, got {0}")]
    Tolerance(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
