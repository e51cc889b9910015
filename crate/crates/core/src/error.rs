use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got k={0}")]
    InvalidRank(usize),

    #[error("rank mismatch: k={left} vs k={right}")]
    RankMismatch { left: usize, right: usize },

    #[error("letter {letter} out of range for k={k}")]
    LetterOutOfRange { letter: usize, k: usize },

    #[error("invalid window {window:?} for k={k}: {reason}")]
    InvalidWindow {
        k: usize,
        window: Vec<i64>,
        reason: &'static str,
    },

    #[error("index set must be a proper subset of {{0,...,{k}}}")]
    FullIndexSet { k: usize },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("{parts:?} is not a {modulus}-core")]
    NotACore { parts: Vec<usize>, modulus: usize },

    #[error("element is not affine Grassmannian")]
    NotGrassmannian,

    #[error("parameter {name}={value} out of range {min}..={max}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} (cap {cap})")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("invariant broken: {0}")]
    Invariant(String),

    #[error("k-code invariant broken: {0}")]
    KCode(String),

    #[error("singular transition block in degree {degree}")]
    SingularTransition { degree: usize },

    #[error("non-integral coefficient in inverse transition for {0:?}")]
    NonIntegral(Vec<usize>),

    #[error("table cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
