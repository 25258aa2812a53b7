use thiserror::Error;

/// Errors produced by the permutation, poset and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    MalformedCycleNotation(String),
    #[error("entry {entry} is outside [1, {degree}]")]
    EntryOutOfRange { entry: usize, degree: usize },
    #[error("entry {0} appears more than once")]
    RepeatedEntry(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {degree} is too small for cycles of length {k}")]
    DegreeTooSmall { degree: usize, k: usize },
    #[error("degree {degree} exceeds the oracle cap {cap}")]
    DegreeAboveOracleCap { degree: usize, cap: usize },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },
    #[error("{0} is not in the group generated by the family")]
    NotInGeneratedGroup(String),
    #[error("{lower} is not below {upper}")]
    NotComparable { lower: String, upper: String },
    #[error("zeta interpolation inconsistent: {0}")]
    InterpolationInconsistent(String),
    #[error("poset has more than {cap} elements")]
    IntervalTooLarge { cap: usize },
    #[error("more than {cap} elements")]
    TooManyElements { cap: usize },
    #[error("more than {cap} reduced words")]
    TooManyWords { cap: usize },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("rank jump vector sums to {sum}, expected {expected}")]
    RankJumpMismatch { sum: usize, expected: usize },
    #[error("zero denominator in {0}")]
    ZeroDenominator(String),
    #[error("generator {0} is not supported on the target")]
    SupportOutsideTarget(String),
    #[error("{0} has a cycle length not congruent to 1 modulo k-1")]
    NotNiceElement(String),
    #[error("{0} is not a noncrossing partition")]
    NotNoncrossing(String),
    #[error("{0} is not in ONC")]
    NotOnc(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("tree does not have the expected flavor: {0}")]
    WrongFlavor(String),
    #[error("index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("not a reduced word: {0}")]
    NotReducedWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
