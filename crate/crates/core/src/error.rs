use thiserror::Error;

/// Errors raised by the toolkit. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("letter {letter} is not a valid generator for {strands} strands")]
    InvalidBraidLetter { letter: i32, strands: usize },

    #[error("letter {letter} is not a valid generator of the free group of rank {rank}")]
    InvalidFreeLetter { letter: i32, rank: usize },

    #[error("rank mismatch: free group of rank {rank} acted on by braids with {strands} strands")]
    RankMismatch { rank: usize, strands: usize },

    #[error("strand count must be positive")]
    ZeroStrands,

    #[error("tuple is not a geometric basis")]
    NotGeometric,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("blocks overlap or exceed the strand count: {0}")]
    BlockOverlap(String),

    #[error("block braid is not syntactically positive: {0}")]
    NonPositiveBlock(String),

    #[error("symmetric-group closure only supported for at most {max} strands (got {n})")]
    TooManyStrands { n: usize, max: usize },

    #[error("enumeration budget exceeded: {needed} assignments > budget {budget}")]
    BudgetExceeded { needed: f64, budget: f64 },

    #[error("invalid Puiseux data: {0}")]
    InvalidSeries(String),

    #[error("branches {0} and {1} coincide (infinite coincidence exponent)")]
    IdenticalBranches(usize, usize),

    #[error("invalid tracker configuration: {0}")]
    InvalidConfig(String),

    #[error("strand collision: {0}")]
    StrandCollision(String),

    #[error("ambiguous crossing pattern near s={s} after {refinements} refinements")]
    AmbiguousCrossing { s: f64, refinements: u32 },

    #[error("tracked permutation disagrees with the Puiseux prediction")]
    PermutationMismatch,

    #[error("strand clusters overlap: {0}")]
    ClusterOverlap(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
