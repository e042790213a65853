use thiserror::Error;

/// Errors produced by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("transformation degree must be positive")]
    ZeroDegree,

    #[error("index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("repeated index {0}")]
    RepeatedIndex(usize),

    #[error("a cycle needs at least two elements, got {0}")]
    CycleTooShort(usize),

    #[error("transformation has rank {rank}, expected {expected}")]
    WrongRank { rank: usize, expected: usize },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("letter index {0} is not in the alphabet")]
    LetterOutOfRange(usize),

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("resource cap exceeded: {what} would need {needed} but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("{0} is not the label of an atom")]
    NotAnAtom(String),

    #[error("automaton is not minimal ({states} states, minimal form has {minimal})")]
    NotMinimal { states: usize, minimal: usize },

    #[error("transition semigroup has {size} elements, full semigroup needs {expected}")]
    NotFullSemigroup { size: u64, expected: u64 },

    #[error("set {set} is not a preimage of letter `{letter}`")]
    NotAPreimage { set: String, letter: String },

    #[error("word does not induce a permutation")]
    NotAPermutation,

    #[error("reachable collection {0} is not an interval")]
    NotAnInterval(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
