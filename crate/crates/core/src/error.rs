use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2")]
    BaseTooSmall,
    #[error("zero-fold iterate of the -1 sentinel is undefined")]
    IterZeroOnSentinel,
    #[error("0 has an empty sandwiching sequence")]
    ZeroInput,
    #[error("operation needs a nonzero term")]
    ZeroTerm,
    #[error("normality guard A_(a-1) b <= A^l_(a-1) A_a(b-s) < A_a b fails")]
    GuardViolated,
    #[error("result exceeds the evaluation budget")]
    Blowup,
    #[error("operation not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("target base must exceed source base")]
    BadBases,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid ordinal term")]
    InvalidTerm,
    #[error("0 has no fundamental sequence")]
    ZeroHasNoFS,
    #[error("oracle overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
