use thiserror::Error;

/// Errors from parsing or validating a Gauss code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed token `{0}`")]
    BadToken(String),
    #[error("unexpected sign character `{0}`")]
    BadSignChar(char),
    #[error("code has {0} sections, expected at most 3")]
    TooManySections(usize),
    #[error("crossing label {0} out of range")]
    LabelOutOfRange(u16),
    #[error("crossing {label} visited {under} times under and {over} times over")]
    BadVisitCounts { label: u16, under: u8, over: u8 },
    #[error("word length {word_len} does not match {signs} signs")]
    SignCountMismatch { word_len: usize, signs: usize },
    #[error("outer arc list is empty")]
    EmptyOuter,
    #[error("outer arc list is not strictly increasing")]
    OuterNotIncreasing,
    #[error("sphere code given where a planar code was expected")]
    MissingOuterSection,
    #[error("planar code given where a sphere code was expected")]
    UnexpectedOuterSection,
}

/// A structurally valid code that does not describe any diagram on the
/// sphere: the forced rotation system closes up on a higher-genus surface.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("code is not realizable: traced {faces} faces, expected {expected}")]
pub struct NotRealizable {
    pub faces: usize,
    pub expected: usize,
}

/// Errors surfaced by invariant computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    NotRealizable(#[from] NotRealizable),
    #[error("outer list {0:?} is not a region of the diagram")]
    BadOuter(Vec<u16>),
    #[error("coefficient overflow in polynomial arithmetic")]
    Overflow,
}
