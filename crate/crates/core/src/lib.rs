//! Base-10 prime reciprocal sequences.
//!
//! The digits of `1/p` repeat with period equal to the multiplicative order
//! of 10 modulo `p`. This crate generates those digits, classifies primes by
//! last digit, tens-digit parity and period length, counts digit frequencies
//! over single periods and prime ranges, and checks the complement and
//! equal-frequency rules those counts obey.
//!
//! ```
//! use dseq_core::{classify, histogram, ReciprocalSpec};
//!
//! let spec = ReciprocalSpec::new(601).unwrap();
//! assert_eq!(spec.period(), 300);
//! assert_eq!(histogram(&spec).counts(), &[35, 28, 28, 31, 28, 28, 31, 28, 28, 35]);
//! assert_eq!(classify(601).unwrap().cofactor, 2);
//! ```

pub mod batch;
pub mod census;
pub mod dseq;
pub mod error;
pub mod invariants;
pub mod numtheory;
pub mod store;
pub mod tables;

pub use batch::Batch;
pub use census::{
    class_census, classify, global_digit_census, third_digit_parity_scan, CensusRow, CensusScope,
    ClassKey, LengthClass, Parity, ParityScanReport, PrimeProfile,
};
pub use dseq::{
    digit_at, digit_stream, histogram, l_multiplier, long_division_digits, Digit, DigitHistogram,
    ReciprocalSpec,
};
pub use error::{Error, Result};
pub use invariants::{
    applicable_rule, check_histogram, verify_range, CheckLevel, RuleId, RuleReport,
    VerificationSummary,
};
pub use numtheory::{factorize, is_prime, multiplicative_order, pow_mod, sieve_primes, Factorization};
pub use store::{CacheRecord, Store};
