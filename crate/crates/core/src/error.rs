use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generator {0} exceeds the supported bound 2^31")]
    GeneratorTooLarge(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("{0} is not a minimal generator")]
    NotAGenerator(i64),
    #[error("{0} is not a pseudo-Frobenius number")]
    NotPseudoFrobenius(i64),
    #[error("{0} is an entry of the NG-vector")]
    FIsNgEntry(i64),
    #[error("enumeration yields {count} matrices, above the cap of {cap}")]
    EnumerationCap { count: u128, cap: u128 },
    #[error("the semigroup is not nearly Gorenstein")]
    NotNearlyGorenstein,
    #[error("{0:?} is not an NG-vector of the semigroup")]
    InvalidNgVector(Vec<i64>),
    #[error("matrices factor different numbers ({plus} and {minus})")]
    MismatchedF { plus: i64, minus: i64 },
    #[error("expected an RF+ matrix paired with an RF- matrix")]
    MismatchedKind,
    #[error("embedding dimension {found}, expected {expected}")]
    WrongEmbeddingDimension { expected: usize, found: usize },
    #[error("duplication parameter b = {0} is not odd")]
    BNotOdd(i64),
    #[error("duplication parameter b = {0} is not in the semigroup")]
    BNotInS(i64),
    #[error("ideal is not contained in S or not closed under adding S: {0}")]
    NotAnIdeal(String),
    #[error("T = {0} is too small, need T >= 2")]
    TTooSmall(i64),
    #[error("precondition {condition} violated (value {value})")]
    PreconditionViolated { condition: String, value: i64 },
    #[error("the semigroup is not almost symmetric")]
    NotAlmostSymmetric,
    #[error("post-condition failed: {0}")]
    PostconditionFailed(String),
}

impl Error {
    /// Stable name of the variant, for machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::GeneratorTooLarge(_) => "GeneratorTooLarge",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotAMember(_) => "NotAMember",
            Error::NotAGenerator(_) => "NotAGenerator",
            Error::NotPseudoFrobenius(_) => "NotPseudoFrobenius",
            Error::FIsNgEntry(_) => "FIsNgEntry",
            Error::EnumerationCap { .. } => "EnumerationCap",
            Error::NotNearlyGorenstein => "NotNearlyGorenstein",
            Error::InvalidNgVector(_) => "InvalidNgVector",
            Error::MismatchedF { .. } => "MismatchedF",
            Error::MismatchedKind => "MismatchedKind",
            Error::WrongEmbeddingDimension { .. } => "WrongEmbeddingDimension",
            Error::BNotOdd(_) => "BNotOdd",
            Error::BNotInS(_) => "BNotInS",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::TTooSmall(_) => "TTooSmall",
            Error::PreconditionViolated { .. } => "PreconditionViolated",
            Error::NotAlmostSymmetric => "NotAlmostSymmetric",
            Error::PostconditionFailed(_) => "PostconditionFailed",
        }
    }
}
