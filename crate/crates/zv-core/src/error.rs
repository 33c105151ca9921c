//! Error type shared across the crate.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty index is not allowed here")]
    EmptyIndex,
    #[error("index parts must be positive")]
    ZeroPart,
    #[error("cannot parse index component {0:?}")]
    IndexParse(String),
    #[error("{0} is not an odd prime below 2^31")]
    InvalidModulus(u64),
    #[error("{value} has no inverse modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("Bernoulli table needs p >= 5 and n_max <= p-3 (got p={p}, n_max={n_max})")]
    BernoulliRange { p: u64, n_max: u32 },
    #[error("prime {p} is below the assertion threshold {min} for weight {weight}")]
    BoundaryPrime { weight: u32, p: u64, min: u64 },
    #[error("lookup needs coverage {needed} but the table was built to {available}")]
    Coverage { needed: u32, available: u32 },
    #[error("binomial upper argument must be nonnegative (got {0})")]
    NegativeBinomial(i64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid parameters: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
