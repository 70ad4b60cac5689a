use thiserror::Error;

/// Which kind of line of a Cayley table broke the Latin property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatinSquare { line: Line, index: usize, value: usize },

    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("not a permutation: {images:?}")]
    NotPermutation { images: Vec<usize> },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("operation is not associative: ({0}·{1})·{2} differs from {0}·({1}·{2})", .witness.0, .witness.1, .witness.2)]
    NotAssociative { witness: (usize, usize, usize) },

    #[error("operation has no two-sided neutral element")]
    NoNeutral,

    #[error("quasigroup is not a group isotope")]
    NotGroupIsotope,

    #[error("canonical decomposition failed verification: {0}")]
    InternalVerificationFailed(String),

    #[error("permutation does not fix the neutral element {neutral}")]
    NotUnitary { neutral: usize },

    #[error("not an autotopism: α({0}) + β({1}) differs from γ({0} + {1})", .witness.0, .witness.1)]
    NotAutotopism { witness: (usize, usize) },

    #[error("coefficient {value} is not a unit modulo {modulus}")]
    NonUnitCoefficient { value: usize, modulus: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("census mismatch for {class}: expected {expected}, computed {computed}")]
    InternalMismatch {
        class: String,
        expected: String,
        computed: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
