use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("malformed p-adic literal `{0}`")]
    Parse(String),
    #[error("precision must be positive")]
    InvalidPrecision,
    #[error("denominator vanishes in `{0}`")]
    ZeroDenominator(String),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("total cancellation: result is zero to the tracked precision")]
    Cancellation,
    #[error("precision {precision} too small to resolve digits down to p^{needed}")]
    InsufficientPrecision { precision: usize, needed: i64 },
    #[error("phase index j = {j} outside 1..={max}")]
    PhaseOutOfRange { j: u32, max: u64 },
    #[error("divergent sum: {0}")]
    Divergent(String),
    #[error("pole of {0}")]
    Pole(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("missing seed a({0})")]
    MissingSeed(u64),
    #[error("principal character rejected")]
    PrincipalCharacter,
    #[error("character is not primitive")]
    NotPrimitive,
    #[error("exponent {exponent} of {prime} exceeds truncation {truncation}")]
    TruncationExceeded { prime: u64, exponent: u32, truncation: usize },
    #[error("state mismatch: {0}")]
    StateMismatch(String),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
