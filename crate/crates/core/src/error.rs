use thiserror::Error;

use crate::euler::ExistenceReport;

/// Errors raised by the library. Verification failures and non-existence
/// are ordinary results, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid class parameters: {0}")]
    InvalidSpec(String),

    #[error("class is empty for these parameters: {0}")]
    EmptyClass(String),

    #[error("word has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("letter {letter} is outside the alphabet [1, {n}]")]
    LetterOutOfRange { letter: u32, n: u32 },

    #[error("enumeration needs {candidates} candidate words, budget is {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    #[error("no Eulerian circuit: {}", .0.reason)]
    NoCircuit(Box<ExistenceReport>),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("invalid witness input: {0}")]
    InvalidWitness(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
