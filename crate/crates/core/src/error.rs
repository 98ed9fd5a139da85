use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must be monic: {0}")]
    NotMonic(String),
    #[error("polynomial is not symplectic (monic, palindromic, even degree >= 2): {0}")]
    NotSymplectic(String),
    #[error("polynomial must have nonzero constant term: {0}")]
    ZeroConstantTerm(String),
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("indices must be distinct, got ({0}, {0})")]
    EqualIndices(usize),
    #[error("matrix dimension {0} is not even")]
    OddDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("homology class {0} is not primitive")]
    NotPrimitive(String),
    #[error("invalid block order {0:?}: expected a permutation of 1..={1}")]
    InvalidOrder(Vec<usize>, usize),
    #[error("handle switch H_{index} is not defined for genus {genus}")]
    UnsupportedHandleSwitch { index: usize, genus: usize },
    #[error("twist exponent must be nonzero")]
    ZeroExponent,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
