use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("subscript at byte {pos} is not an integer: {token:?}")]
    BadSubscript { pos: usize, token: String },

    #[error("empty word")]
    EmptyWord,

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("word reduces to the identity")]
    FreelyTrivial,

    #[error("generator x0 does not occur in `{0}` (shift the subscripts so that it does)")]
    MissingX0(String),

    #[error("{u} is not a unit modulo {n}")]
    NotAUnit { u: i64, n: u32 },

    #[error("relator `{0}` is not cyclically reduced")]
    NotCyclicallyReduced(String),

    #[error("relator has rank {found} but the presentation has rank {expected}")]
    RankMismatch { expected: u32, found: u32 },

    #[error("hypotheses not met: {0}")]
    Hypotheses(String),

    #[error("set has {found} elements but k = {k}")]
    SetSize { found: usize, k: usize },

    #[error("{what} = {value} is outside the supported range {lo}..={hi}")]
    OutOfBounds { what: &'static str, value: u64, lo: u64, hi: u64 },

    #[error("component isomorphism undecided: component with {0} vertices exceeds the search bound")]
    Undecided(usize),

    #[error(
        "cross-validation failed for `{word}`: criteria give {criteria}, direct computation gives {direct}"
    )]
    CrossValidation { word: String, criteria: String, direct: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
