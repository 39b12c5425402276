use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error(
        "token `{token}` occurs {count} times (expected {expected}); first at position {position}"
    )]
    LetterCount {
        token: String,
        count: usize,
        expected: usize,
        position: usize,
    },

    #[error("invalid character {ch:?} at position {position}; compact words use A-Z only")]
    InvalidCharacter { ch: char, position: usize },

    #[error("compact form supports at most 26 distinct letters")]
    TooManyLetters,

    #[error("edges share vertex {0}")]
    SharedVertex(u32),

    #[error("invalid edge {{{0}, {1}}}: endpoints must be distinct and positive")]
    InvalidEdge(u32, u32),

    #[error("invalid triple {0:?}: elements must be distinct and positive")]
    InvalidTriple([u32; 3]),

    #[error("matching is not a landscape: edges {0} and {1} nest")]
    NotALandscape(usize, usize),

    #[error("size {have} too small: the guarantee needs at least {need} elements")]
    SizeTooSmall { need: u64, have: usize },

    #[error("not a semi-line: triples {0} and {1} are neither aligned nor engaged")]
    NotASemiLine(usize, usize),

    #[error("engagement graph is not a linear forest")]
    EngagementGraphNotLinearForest,

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("matching is not permutational: a right end precedes a left end")]
    NotPermutational,

    #[error("size {n} exceeds the exhaustive-search guard of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("index {index} out of range for a host with {len} edges")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("n - m must be even (n = {n}, m = {m})")]
    InvalidParity { n: usize, m: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported statistic `{0}`")]
    UnsupportedStatistic(String),
}

impl Error {
    /// True for malformed input or parameters; false for well-formed input
    /// that violates an operation's precondition or size guard.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyInput
                | Error::LetterCount { .. }
                | Error::InvalidCharacter { .. }
                | Error::TooManyLetters
                | Error::SharedVertex(_)
                | Error::InvalidEdge(..)
                | Error::InvalidTriple(_)
                | Error::NotAPermutation(_)
                | Error::InvalidParity { .. }
                | Error::InvalidParameter(_)
                | Error::UnsupportedStatistic(_)
        )
    }
}
