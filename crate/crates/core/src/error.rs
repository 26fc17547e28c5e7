use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped loosely by the exit-code class the CLI maps them to:
/// precondition violations, budget refusals, and arithmetic inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse in GF(4)")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("length {0} is even; only odd lengths are supported")]
    EvenLength(usize),

    #[error("length must be at least 1")]
    ZeroLength,

    #[error("length {len} exceeds the engine limit of {max}")]
    LengthTooLarge { len: usize, max: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{poly} does not divide x^{n}+1")]
    NotDivisor { poly: String, n: usize },

    #[error("factor product {product} differs from x^{n}+1")]
    ProductMismatch { product: String, n: usize },

    #[error("factors {0} and {1} are not coprime")]
    NotCoprime(String, String),

    #[error("enumeration of 4^{needed} words exceeds the budget of 4^{cap}")]
    Budget { needed: u32, cap: u32 },

    #[error("the zero code has no minimum distance")]
    EmptyCode,

    #[error("inconsistent: {0}")]
    Inconsistent(String),

    #[error("invalid reference data: {0}")]
    Data(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
