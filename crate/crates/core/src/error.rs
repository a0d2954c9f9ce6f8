use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet has {0} symbols, at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(u8),
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("operation requires a binary alphabet, got {0} symbols")]
    NotBinary(usize),
    #[error("{what}: limit is {limit}, requested {requested}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("set is not prefix-free: {0}")]
    NotPrefixFree(String),
    #[error("set is not antifactorial: {0}")]
    NotAntifactorial(String),
    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),
    #[error("not the minimal forbidden factor set of a finite word: the avoiding language is infinite")]
    InfiniteLanguage,
    #[error("not the minimal forbidden factor set of a single word: longest path is not unique")]
    AmbiguousLongestPath,
    #[error("not the minimal forbidden factor set of a circular word: no cycle found")]
    NoCycle,
    #[error("reconstructed word does not reproduce the input set")]
    VerificationMismatch,
    #[error("index {index} is below the minimum {min}")]
    IndexTooSmall { index: usize, min: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
