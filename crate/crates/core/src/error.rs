use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in the range 2 < p < 2^31")]
    BadCharacteristic(u64),
    #[error("variable count {0} outside 1..={max}", max = crate::monomial::MAX_VARS)]
    BadVariableCount(usize),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("monomials have {0} and {1} variables")]
    VariableCountMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("matrix is not a homogeneous degree-0 map: {0}")]
    InhomogeneousMatrix(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("index {index} out of range 0..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("codimension check failed: expected {expected}, found {found}")]
    Codimension { expected: i64, found: i64 },
    #[error("no regular section found: {0}")]
    IrregularSection(String),
    #[error("section is identically zero: {0}")]
    ZeroSection(String),
    #[error("no regular sequence of length {0} found inside the ideal")]
    NoRegularSequence(usize),
    #[error("complete intersection of type {0:?} not found inside the ideal")]
    NoCompleteIntersection(Vec<u32>),
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error("resolution is not minimal")]
    NotMinimal,
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Failures that come from the mathematics of the input (a codimension
    /// or regularity condition that does not hold) rather than from bad usage.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::Codimension { .. }
                | Error::IrregularSection(_)
                | Error::ZeroSection(_)
                | Error::NoRegularSequence(_)
                | Error::NoCompleteIntersection(_)
                | Error::Certificate(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
