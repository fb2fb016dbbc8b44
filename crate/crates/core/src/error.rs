use thiserror::Error;

use crate::gf2::BinaryPolynomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse polynomial {0:?}: expected a string of 0/1 coefficients, highest degree first")]
    Parse(String),

    #[error("polynomial degree {0} exceeds the supported maximum of 63")]
    DegreeOverflow(usize),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{0} is reducible over GF(2)")]
    Reducible(BinaryPolynomial),

    #[error("{0} is not primitive")]
    NotPrimitive(BinaryPolynomial),

    #[error(
        "repeated factor {0}: characteristic polynomials with repeated roots are not supported; \
         supply distinct irreducible factors"
    )]
    RepeatedFactor(BinaryPolynomial),

    #[error(
        "{0} cannot be used as a factor: factors must have degree >= 1 and a nonzero constant term"
    )]
    InvalidFactor(BinaryPolynomial),

    #[error("factor {poly} has degree {degree}, above the per-factor limit of {limit}")]
    FactorTooLarge {
        poly: BinaryPolynomial,
        degree: usize,
        limit: usize,
    },

    #[error("total degree {n} exceeds the safety cap {cap} (use --partial or raise --max-degree)")]
    DegreeCap { n: usize, cap: usize },

    #[error("total degree {0} is too small: the register needs at least 2 stages")]
    DegreeTooSmall(usize),

    #[error("no factors given")]
    NoFactors,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("sequence of length {len} cannot supply index {needed}")]
    InsufficientLength { len: usize, needed: usize },

    #[error("singular linear system over GF(2)")]
    Singular,

    #[error("state {0:#b} not found on any cycle of the factor register")]
    StateNotFound(u64),

    #[error("adjacency graph is disconnected; unreachable vertices (numbered from 1): {0:?}")]
    Disconnected(Vec<usize>),

    #[error("edge selector {index} out of range for a bundle of {len} conjugate pairs")]
    SelectorOutOfRange { index: usize, len: usize },

    #[error("duplicate suffix in feedback modifier; tree edges are not distinct conjugate pairs")]
    SuffixCollision,

    #[error("invalid bit string {0:?}")]
    InvalidBits(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
