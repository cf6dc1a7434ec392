use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed surd roots {0} and {1}")]
    RootMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported surd root {0}")]
    UnsupportedRoot(u32),
    #[error("precision {0} below the 40 digit minimum")]
    InsufficientPrecision(u32),
    #[error("angle {0}/{1} of pi is a pole")]
    PoleAngle(i64, i64),
    #[error("angle {0}/{1} of pi outside (-2, 2)")]
    AngleOutOfRange(i64, i64),
    #[error("negative power of sigma with nonzero coefficient")]
    LaurentLeak,
    #[error("index {index} outside 0..={max}")]
    IndexError { index: i64, max: i64 },
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("enumeration exceeded {0} elements")]
    EnumerationDiverged(usize),
    #[error("angle resolution failed for an element of order {0}")]
    AngleResolutionFailed(u32),
    #[error("cache corrupt: {0}")]
    CacheCorrupt(String),
    #[error("cache version or key mismatch: {0}")]
    CacheVersion(String),
    #[error("rank {p} invalid for d = {d}")]
    RankError { p: i64, d: i64 },
    #[error("sanity check failed: {0}")]
    SanityFailure(String),
    #[error("identity failed: {0}")]
    InternalIdentityFailure(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
