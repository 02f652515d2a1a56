use thiserror::Error;

/// Errors raised by the group, set and action layers.
///
/// Verification outcomes (a failed cover, a violated row, ...) are not errors;
/// they are returned as reports by the operations that compute them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {index} is out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::groups::MAX_RANK)]
    RankTooLarge(usize),
    #[error("invalid letter {letter:?} at offset {offset}")]
    InvalidLetter { letter: char, offset: usize },
    #[error("empty word at offset 0 (the identity is written \"e\")")]
    EmptyWord,
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("group elements belong to different universes")]
    UniverseMismatch,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator {0} has no assigned permutation")]
    UnassignedGenerator(usize),
    #[error("point {0} does not belong to the action's universe")]
    IncompatiblePoint(String),
    #[error("element {0} cannot act in this backend")]
    IncompatibleElement(String),
    #[error("set does not belong to the action's universe")]
    IncompatibleSet,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid configuration pair: {0}")]
    InvalidPair(String),
    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("map is not surjective: point {0} has no preimage")]
    NotSurjective(usize),
    #[error("configuration {0} is not in the configuration set")]
    UnknownConfiguration(String),
    #[error("coordinate {index} is out of range for a tuple of length {len}")]
    CoordinateOutOfRange { index: usize, len: usize },
    #[error("not a refinement: {0}")]
    NotARefinement(String),
    #[error("solution rejected: {0}")]
    InvalidSolution(String),
    #[error("operation requires a finite backend")]
    NotFinite,
    #[error("{0}")]
    Precondition(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
