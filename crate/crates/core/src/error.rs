use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    EnumerationCap { requested: u128, cap: u128 },

    #[error("code needs at least two distinct codewords")]
    TooFewCodewords,

    #[error("decoder found no codeword within radius {radius}")]
    DecodeFailure { radius: usize },

    #[error("no candidate codeword covers every read")]
    NoConsistentCodeword,

    #[error("no coordinate set of size {size} satisfies the shattering condition")]
    NoWitness { size: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
