use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the dseq library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("10 not invertible mod {0}")]
    NotInvertible(u64),

    #[error("{0} exceeds the supported prime cap of {cap}", cap = crate::numtheory::PRIME_CAP)]
    AboveCap(u64),

    #[error("{base} and {modulus} are not coprime")]
    NotCoprime { base: u64, modulus: u64 },

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("digit index must be >= 1")]
    ZeroIndex,

    #[error("digit value {0} out of range 0..=9")]
    DigitRange(u64),

    #[error("primes do not match class key {key}: {offenders:?}")]
    KeyMismatch { key: String, offenders: Vec<u64> },

    #[error("no structural rule applies to {0} (period is neither full nor half length)")]
    NoApplicableRule(u64),

    #[error("invalid cache record for {p}: {reason}")]
    InvalidRecord { p: u64, reason: String },

    #[error("cache corruption in {path}: {reason}")]
    CacheCorruption { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
