use thiserror::Error;

/// Errors surfaced by the library.
///
/// `NotOnVariety` and `ResultNotAdmitted` are semantic failures: the input
/// (or a computed intermediate) does not correspond to an integral point or
/// component. The rest are plain argument errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected n = {expected}, got n = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("not a valid permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("vector does not lie in the root lattice (coordinates must sum to 0)")]
    NotInRootLattice,

    #[error("vector is not admitted: {0}")]
    NotAdmitted(String),

    #[error("point is not on the variety: extracted vector fails the admissibility conditions ({0})")]
    NotOnVariety(String),

    #[error("action produced a non-admitted vector, this is a bug: {0}")]
    ResultNotAdmitted(String),

    #[error("permutation is not an (n+1)-cycle: {0}")]
    NotCircular(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
