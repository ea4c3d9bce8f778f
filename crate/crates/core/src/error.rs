use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("'$' is reserved for the delimiter")]
    ReservedDelimiter,
    #[error("symbol id {0} is out of range")]
    SymbolOutOfRange(usize),
    #[error("alphabet too large: {0} symbols")]
    AlphabetTooLarge(usize),
    #[error("invalid obstruction triple: {0}")]
    InvalidTriple(String),
    #[error("invalid path query: {0}")]
    InvalidPathQuery(String),
    #[error("the delimiter is never removable")]
    DelimiterNotRemovable,
    #[error("automaton budget exceeded: more than {limit} states")]
    BudgetExceeded { limit: usize },
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("malformed automaton: {0}")]
    InvalidAutomaton(String),
    #[error("the alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabets differ")]
    AlphabetMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
