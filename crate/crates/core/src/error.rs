use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("generator index {index} at line {line}, column {col} is outside 1..={max}")]
    GeneratorOutOfRange {
        index: i64,
        max: usize,
        line: usize,
        col: usize,
    },

    #[error("color m={m} exceeds level N={level}")]
    ColorExceedsLevel { m: u32, level: u32 },

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("coefficient overflow")]
    CoefficientOverflow,

    #[error("negative crossing at position {position}; a positive braid is required")]
    NegativeCrossing { position: usize },

    #[error("the braid specification is not complete")]
    NotComplete,

    #[error("the braid specification is not positive")]
    NotPositive,

    #[error("invalid move parameters: {0}")]
    InvalidMove(String),

    #[error("{0} requires a finite level N")]
    InfiniteLevel(&'static str),

    #[error("{what}: {count} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        count: String,
        cap: u128,
    },

    #[error("irreducible web: {0}")]
    Irreducible(String),

    #[error("invalid web: {0}")]
    InvalidWeb(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
