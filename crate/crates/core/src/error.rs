use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol {symbol:?} at position {position}")]
    UnknownSymbol { position: usize, symbol: char },
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet size {0} is outside 1..=256")]
    AlphabetSize(usize),
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("symbol code {code} is out of range for alphabet size {size}")]
    CodeOutOfRange { code: usize, size: usize },
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("index was built over a different word")]
    IndexMismatch,
    #[error("no Lee-isometry characterization for alphabet size {0} (supported: 1..=4)")]
    UnsupportedAlphabetSize(usize),
    #[error("{vertices} vertices exceed the budget of {budget}")]
    BudgetExceeded { vertices: u128, budget: u64 },
    #[error("word {0} contains the forbidden factor")]
    NotFFree(String),
}
