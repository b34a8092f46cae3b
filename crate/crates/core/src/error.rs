use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("{0} is not a partition")]
    NotPartition(String),
    #[error("{partition} is not {k}-strict")]
    NotKStrict { partition: String, k: usize },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("pair set is not an order ideal: {0}")]
    InvalidPairSet(String),
    #[error("operator length {len} is shorter than the index length {needed}")]
    LengthTooShort { len: usize, needed: usize },
    #[error("factor depends on t but the target basis is t-free")]
    TDependentFactor,
    #[error("p = {p} is below the threshold {threshold}")]
    ThresholdViolation { p: usize, threshold: usize },
    #[error("missing basis expansion for {0}")]
    MissingExpansion(String),
    #[error("leading coefficient of {0} is not a unit")]
    NonUnitLeading(String),
    #[error("pair ({i},{j}) is not tame for this pair set")]
    NotTame { i: usize, j: usize },
    #[error("pair ({i},{j}) is already in the set or breaks the order ideal")]
    BadMitosisPair { i: usize, j: usize },
    #[error("polynomial is not a nonnegative Q-combination: {0}")]
    NotQExpandable(String),
    #[error("e-series realization requires t = -1")]
    NeedsTMinusOne,
    #[error("{partition} does not lie in the {rows}x{cols} rectangle")]
    OutsideRectangle { partition: String, rows: usize, cols: usize },
    #[error("not a signed permutation: {0}")]
    BadSignedPermutation(String),
    #[error("{0} is not {1}-Grassmannian")]
    NotGrassmannian(String, usize),
    #[error("degree {degree} exceeds the number of variables {vars}")]
    TooFewVariables { degree: usize, vars: usize },
    #[error("variable sets differ")]
    VarMismatch,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
