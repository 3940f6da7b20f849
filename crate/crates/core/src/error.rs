use thiserror::Error;

/// Errors shared across the crate. Every failure mode of a public operation
/// maps to one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("reflection index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("elements belong to different root data")]
    MixedRootData,
    #[error("elements are not comparable in Bruhat order")]
    NotComparable,
    #[error("elements do not form a covering pair")]
    NotACover,
    #[error("N = {0} must exceed every boundary multiplicity (max is {1})")]
    NTooSmall(i64, i64),
    #[error("interval has dimension zero")]
    DimensionZero,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("weight is not dominant")]
    NotDominant,
    #[error("section vanishes identically on the chart")]
    SectionIdenticallyZero,
    #[error("word is not reduced")]
    NotReduced,
    #[error("operation requires a positive-characteristic coefficient field")]
    WrongField,
    #[error("{0} is not a supported prime (use 2, 3, 5 or 7)")]
    NotPrime(u64),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideals are not nested")]
    NotNested,
    #[error("unsupported rank {0} (supported: 2..=4)")]
    UnsupportedRank(usize),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("group enumeration exceeded the cap of {0} elements; infinite type?")]
    EnumerationCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
