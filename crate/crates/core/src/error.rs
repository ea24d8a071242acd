use thiserror::Error;

/// Errors raised while parsing input or combining incompatible values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet needs at least two letters, got {0}")]
    AlphabetTooSmall(usize),
    #[error("alphabet letter {0:?} is not a lowercase ASCII letter")]
    InvalidLetter(char),
    #[error("letter {0:?} occurs twice in the alphabet")]
    DuplicateLetter(char),
    #[error("letter {0:?} is not in the alphabet")]
    LetterNotInAlphabet(char),
    #[error("shuffle needs words of equal length, got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("automata are over different alphabets")]
    AlphabetMismatch,
    #[error("symbol {0} is not in the automaton's alphabet")]
    SymbolNotInAlphabet(String),
    #[error("state {0} does not exist")]
    NoSuchState(usize),
    #[error("state {state} already has a transition on {symbol}")]
    Nondeterministic { state: usize, symbol: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("at offset {offset}: {message}")]
    Expr { offset: usize, message: String },
    #[error("embedding expects letters from {expected:?}, got {found:?}")]
    EmbeddingLetter { expected: &'static str, found: char },
    #[error("conjugator witness {0} failed verification")]
    WitnessRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
