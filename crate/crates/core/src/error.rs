use thiserror::Error;

use crate::sequence::SequenceViolation;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("position must be at least 1")]
    ZeroPosition,

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid index sequence: {}", format_violations(.0))]
    InvalidSequence(Vec<SequenceViolation>),

    #[error("index sequence cycle must be nonempty")]
    EmptyCycle,

    #[error("no rotation of the cycle can follow the word without repeating index {0}")]
    UnfixableSeam(usize),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("index sequence does not extend the word: position {position} has {found}, word has {expected}")]
    SequenceMismatch {
        position: usize,
        expected: usize,
        found: usize,
    },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("operation requires a highest weight, but the context is B(infinity)")]
    InfinityMode,

    #[error("character elements anchored at different weights")]
    AnchorMismatch,

    #[error("invalid rank 2 parameters: {0}")]
    InvalidRank2(String),

    #[error("length {length} exceeds l_max = {l_max}")]
    BeyondLMax { length: usize, l_max: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

fn format_violations(v: &[SequenceViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
