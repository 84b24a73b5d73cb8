use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol index {0} is out of range for the alphabet")]
    SymbolOutOfRange(u8),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet must contain between 1 and 255 symbols, got {0}")]
    AlphabetSize(usize),
    #[error("{0} requires a non-empty word")]
    EmptyWord(&'static str),
    #[error("{op} requires a word of length at least {min}, got {len}")]
    WordTooShort { op: &'static str, min: usize, len: usize },
    #[error("{0} requires a binary alphabet")]
    NonBinaryAlphabet(&'static str),
    #[error("malformed morphism: {0}")]
    MorphismSyntax(String),
    #[error("morphism erases symbol {0:?}")]
    ErasingImage(char),
    #[error("morphism is not injective: {left:?} and {right:?} have the same image")]
    NotInjective { left: String, right: String },
    #[error("iterating more than once requires an endomorphism")]
    NotEndomorphism,
    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("net occurrences are undefined for an empty MUS list")]
    EmptyMusList,
    #[error("empty pattern in dictionary")]
    EmptyPattern,
    #[error("dictionary has no patterns")]
    NoPatterns,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
