use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("group order {order} exceeds the configured maximum {max}")]
    UnsupportedOrder { order: u128, max: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the trivial group has no reduced power graph")]
    TrivialGroup,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("input too large for this method: {0}")]
    TooLarge(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{count} middle divisors exceed the subset-expansion limit of {limit}")]
    TooManyDivisors { count: usize, limit: usize },
    #[error("primes must be distinct, got {0} twice")]
    EqualPrimes(u64),
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("group is not an EPO group: it has an element of order {0}")]
    NotEpo(u32),
    #[error("invalid prime pair ({p}, {q}): need q < p and p = 1 mod q")]
    InvalidPair { p: u64, q: u64 },
    /// An exact identity that must hold did not (inexact division, sign error).
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
