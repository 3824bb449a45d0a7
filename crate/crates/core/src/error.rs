use thiserror::Error;

use crate::perm::SubPermutationWitness;

/// Errors produced by the library. Positions and indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: a permutation needs at least one element")]
    EmptyInput,

    #[error("duplicate value {value} at positions {first} and {second}")]
    DuplicateValue {
        value: i64,
        first: usize,
        second: usize,
    },

    #[error("value {value} at position {position} is outside 1..={n}")]
    OutOfRangeValue { position: usize, value: i64, n: usize },

    #[error("value 1 present at position {position}; cannot shift down")]
    ContainsOne { position: usize },

    #[error("cannot parse permutation text: {0}")]
    Parse(String),

    #[error("invalid bound k={k}, l={l}: need k, l >= {min}")]
    InvalidBound { k: usize, l: usize, min: usize },

    #[error("invalid shape {rows}x{cols}: need rows, cols >= 1")]
    InvalidShape { rows: usize, cols: usize },

    #[error("tableau entries are not exactly 1..={expected_max}")]
    NotAPermutationFilling { expected_max: usize },

    #[error("row {0} is not strictly increasing")]
    RowNotIncreasing(usize),

    #[error("column {0} is not strictly increasing")]
    ColumnNotIncreasing(usize),

    #[error("tableau matrix is not rectangular: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("tableau shapes differ: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("invalid tableau {which}: {source}")]
    InvalidTableau {
        which: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("permutation of length {found} cannot belong to S(k={k}, l={l}) of length {expected}")]
    LengthMismatch {
        k: usize,
        l: usize,
        expected: usize,
        found: usize,
    },

    #[error("permutation is not in S(k={k}, l={l}): {} subsequence of length {} at positions {:?}", .witness.direction, .witness.len(), .witness.positions)]
    NotExtremal {
        k: usize,
        l: usize,
        witness: SubPermutationWitness,
    },

    #[error("enumeration needs {required} items but the budget is {cap}")]
    BudgetExceeded { required: String, cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
