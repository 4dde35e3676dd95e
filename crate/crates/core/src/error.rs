//! Crate-wide error type.
//!
//! Every fallible operation in the engine reports through [`Error`]. The
//! variants are deliberately coarse: callers mostly need to distinguish
//! syntax problems, exhausted randomization budgets, exhausted resource
//! budgets, and identity-check failures.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The polynomial text could not be tokenized or parsed.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// An identifier in the input is not among the declared variables.
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    /// Requested modulus is unusable for coefficient arithmetic.
    #[error("invalid modulus {0}: need an odd prime below 2^32")]
    InvalidModulus(u64),

    /// A configured pair or reduction budget ran out mid-computation.
    #[error("resource budget exhausted during {phase}: {detail}")]
    ResourceLimit { phase: &'static str, detail: String },

    /// Every randomized trial failed a genericity check.
    #[error("genericity trials exhausted during {phase} after {trials} attempts")]
    GenericityExhausted { phase: &'static str, trials: usize },

    /// The radicality test could not separate the candidate points within
    /// its trial budget. Distinct from a negative answer.
    #[error("radicality test inconclusive after {trials} trials")]
    RadicalityIndeterminate { trials: usize },

    /// The presented ideal contains 1, so it cuts out the empty set.
    #[error("the ideal contains 1: it cuts out the empty set")]
    EmptyVariety,

    /// Declared dimension disagrees with the computed one.
    #[error("declared dimension {declared} but the ideal has dimension {computed}")]
    DimensionMismatch { declared: i64, computed: i64 },

    /// The two independent degree routes disagree; this points at a bad
    /// modulus choice or an input that is not pure-dimensional.
    #[error(
        "degree cross-check mismatch: slicing counted {sliced} points but \
         leading terms give degree {leading}"
    )]
    DegreeMismatch { sliced: u64, leading: u64 },

    /// Minor expansion is capped at presentations with few generators.
    #[error("presentation has {got} generators; at most {max} are supported")]
    TooManyGenerators { got: usize, max: usize },

    /// A stratum table is missing the data a check requires.
    #[error("stratum table incomplete: {0}")]
    IncompleteStrata(String),

    /// Solving for an unknown local obstruction did not yield an integer.
    #[error("no integral solution for the unknown local obstruction: {0}")]
    NonIntegralSolution(String),

    /// Catch-all for contract violations on arguments.
    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Byte position of a syntax-class error, if it has one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Syntax { pos, .. } | Error::UnknownVariable { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}
