//! Decimal digits of `1/p`.
//!
//! The i-th digit (i >= 1) is `(l * (10^i mod p)) mod 10`, where `l` is the
//! digit with `l * p = 9 (mod 10)`. Since `10^i mod p = 10 r - d p` for the
//! previous remainder `r` and digit `d`, multiplying by `l` and reducing mod 10
//! isolates `d`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, multiplicative_order, pow_mod, PRIME_CAP};

/// A single decimal digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    pub fn new(value: u8) -> Result<Self> {
        Self::try_from(value as u64)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl TryFrom<u64> for Digit {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        if value <= 9 {
            Ok(Digit(value as u8))
        } else {
            Err(Error::DigitRange(value))
        }
    }
}

impl From<Digit> for u8 {
    fn from(d: Digit) -> u8 {
        d.0
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Checks that `p` is a prime the generator can handle.
pub(crate) fn validate_prime(p: u64) -> Result<()> {
    if p > PRIME_CAP {
        return Err(Error::AboveCap(p));
    }
    if p == 2 || p == 5 {
        return Err(Error::NotInvertible(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// The multiplier digit `l` for `p`: 9, 3, 7, 1 for `p mod 10` = 1, 3, 7, 9.
pub fn l_multiplier(p: u64) -> Result<u8> {
    validate_prime(p)?;
    Ok(match p % 10 {
        1 => 9,
        3 => 3,
        7 => 7,
        9 => 1,
        _ => unreachable!("primes other than 2 and 5 end in 1, 3, 7 or 9"),
    })
}

/// A prime together with its multiplier and period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReciprocalSpec {
    p: u64,
    l: u8,
    period: u64,
}

impl ReciprocalSpec {
    pub fn new(p: u64) -> Result<Self> {
        let l = l_multiplier(p)?;
        let period = multiplicative_order(10, p)?;
        Ok(ReciprocalSpec { p, l, period })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn l(&self) -> u8 {
        self.l
    }

    /// Length of the repeating block, the order of 10 mod p.
    pub fn period(&self) -> u64 {
        self.period
    }
}

/// The digit at 1-based position `i` of the expansion of `1/p`.
pub fn digit_at(spec: &ReciprocalSpec, i: u64) -> Result<Digit> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    let r = pow_mod(10, i, spec.p);
    Ok(Digit((spec.l as u64 * r % 10) as u8))
}

/// Iterator over one full period of digits of `1/p`.
///
/// Keeps only the running remainder, so each step costs one multiply and one
/// reduction.
#[derive(Debug, Clone)]
pub struct DigitStream {
    p: u64,
    l: u64,
    remainder: u64,
    remaining: u64,
}

impl Iterator for DigitStream {
    type Item = Digit;

    #[inline]
    fn next(&mut self) -> Option<Digit> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        self.remainder = self.remainder * 10 % self.p;
        Some(Digit((self.l * self.remainder % 10) as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for DigitStream {}

/// Digits `1..=T` of `1/p`.
pub fn digit_stream(spec: &ReciprocalSpec) -> DigitStream {
    DigitStream {
        p: spec.p,
        l: spec.l as u64,
        remainder: 1,
        remaining: spec.period,
    }
}

/// First `n` digits of `1/p` by schoolbook long division.
///
/// Shares nothing with [`digit_stream`] beyond the input, which is what makes
/// it usable as a cross-check.
pub fn long_division_digits(p: u64, n: usize) -> Result<Vec<Digit>> {
    validate_prime(p)?;
    let mut r = 1u64;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let t = 10 * r;
        out.push(Digit((t / p) as u8));
        r = t % p;
    }
    Ok(out)
}

/// Digit counts over some sequence, indexed by digit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitHistogram {
    counts: [u64; 10],
    total: u64,
}

impl DigitHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: [u64; 10]) -> Self {
        DigitHistogram {
            counts,
            total: counts.iter().sum(),
        }
    }

    pub fn counts(&self) -> &[u64; 10] {
        &self.counts
    }

    pub fn count(&self, digit: u8) -> u64 {
        self.counts[digit as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn record(&mut self, digit: Digit) {
        self.counts[digit.0 as usize] += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &DigitHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts.iter()) {
            *a += b;
        }
        self.total += other.total;
    }

    /// Digits attaining the maximum count, ascending.
    pub fn argmax(&self) -> Vec<u8> {
        let max = self.counts.iter().max().copied().unwrap_or(0);
        (0..10).filter(|&d| self.counts[d as usize] == max).collect()
    }

    /// Digits attaining the minimum count, ascending.
    pub fn argmin(&self) -> Vec<u8> {
        let min = self.counts.iter().min().copied().unwrap_or(0);
        (0..10).filter(|&d| self.counts[d as usize] == min).collect()
    }
}

impl FromIterator<Digit> for DigitHistogram {
    fn from_iter<I: IntoIterator<Item = Digit>>(iter: I) -> Self {
        let mut h = DigitHistogram::new();
        for d in iter {
            h.record(d);
        }
        h
    }
}

/// Digit counts over exactly one period of `1/p`.
pub fn histogram(spec: &ReciprocalSpec) -> DigitHistogram {
    let mut counts = [0u64; 10];
    for d in digit_stream(spec) {
        counts[d.0 as usize] += 1;
    }
    DigitHistogram::from_counts(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::sieve_primes;
    use proptest::prelude::*;

    fn digits(v: &[Digit]) -> Vec<u8> {
        v.iter().map(|d| d.value()).collect()
    }

    fn spec(p: u64) -> ReciprocalSpec {
        ReciprocalSpec::new(p).unwrap()
    }

    #[test]
    fn multiplier_table() {
        assert_eq!(l_multiplier(601).unwrap(), 9);
        assert_eq!(l_multiplier(23).unwrap(), 3);
        assert_eq!(l_multiplier(19).unwrap(), 1);
        assert_eq!(l_multiplier(7).unwrap(), 7);
        assert!(matches!(l_multiplier(2), Err(Error::NotInvertible(2))));
        assert!(matches!(l_multiplier(5), Err(Error::NotInvertible(5))));
        assert!(matches!(l_multiplier(21), Err(Error::NotPrime(21))));
        assert!(matches!(l_multiplier(1), Err(Error::NotPrime(1))));
        assert!(matches!(
            l_multiplier(PRIME_CAP + 2),
            Err(Error::AboveCap(_))
        ));
    }

    #[test]
    fn multiplier_identity_to_1e5() {
        for p in sieve_primes(100_000).into_iter().filter(|&p| p != 2 && p != 5) {
            assert_eq!(l_multiplier(p).unwrap() as u64 * p % 10, 9, "p = {p}");
        }
    }

    #[test]
    fn long_division_examples() {
        assert_eq!(digits(&long_division_digits(7, 6).unwrap()), [1, 4, 2, 8, 5, 7]);
        assert_eq!(digits(&long_division_digits(3, 2).unwrap()), [3, 3]);
        assert_eq!(digits(&long_division_digits(11, 4).unwrap()), [0, 9, 0, 9]);
        assert!(long_division_digits(7, 0).unwrap().is_empty());
        assert!(long_division_digits(5, 3).is_err());
    }

    #[test]
    fn digit_at_examples() {
        assert_eq!(digit_at(&spec(7), 1).unwrap().value(), 1);
        assert_eq!(digit_at(&spec(7), 2).unwrap().value(), 4);
        assert_eq!(digit_at(&spec(3), 1).unwrap().value(), 3);
        assert!(matches!(digit_at(&spec(7), 0), Err(Error::ZeroIndex)));
    }

    #[test]
    fn stream_examples() {
        let s: Vec<u8> = digit_stream(&spec(7)).map(u8::from).collect();
        assert_eq!(s, [1, 4, 2, 8, 5, 7]);
        let s: Vec<u8> = digit_stream(&spec(3)).map(u8::from).collect();
        assert_eq!(s, [3]);
        let s: Vec<u8> = digit_stream(&spec(11)).map(u8::from).collect();
        assert_eq!(s, [0, 9]);
        assert_eq!(digit_stream(&spec(17)).len(), 16);
    }

    #[test]
    fn histogram_examples() {
        let h = histogram(&spec(601));
        assert_eq!(h.counts(), &[35, 28, 28, 31, 28, 28, 31, 28, 28, 35]);
        assert_eq!(h.total(), 300);
        let h = histogram(&spec(911));
        assert_eq!(h.counts(), &[58, 47, 50, 44, 44, 47, 47, 41, 44, 33]);
        assert_eq!(h.total(), 455);
        let oracle: DigitHistogram = long_division_digits(7, 6).unwrap().into_iter().collect();
        assert_eq!(histogram(&spec(7)), oracle);
        assert_eq!(oracle.counts(), &[0, 1, 1, 0, 1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn stream_matches_long_division_to_1e4() {
        for p in sieve_primes(10_000).into_iter().filter(|&p| p != 2 && p != 5) {
            let s = spec(p);
            let n = s.period().min(10_000) as usize;
            let formula: Vec<Digit> = digit_stream(&s).take(n).collect();
            assert_eq!(formula, long_division_digits(p, n).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn histogram_total_is_period_to_1e5() {
        for p in sieve_primes(100_000).into_iter().filter(|&p| p != 2 && p != 5) {
            let s = spec(p);
            let h = histogram(&s);
            assert_eq!(h.total(), s.period());
            assert_eq!(h.counts().iter().sum::<u64>(), h.total());
        }
    }

    #[test]
    fn argmax_argmin_report_ties() {
        let h = DigitHistogram::from_counts([5, 1, 5, 2, 2, 2, 2, 1, 3, 3]);
        assert_eq!(h.argmax(), vec![0, 2]);
        assert_eq!(h.argmin(), vec![1, 7]);
    }

    #[test]
    fn digit_range() {
        assert!(Digit::new(9).is_ok());
        assert!(matches!(Digit::new(10), Err(Error::DigitRange(10))));
    }

    proptest! {
        #[test]
        fn digit_at_is_periodic(idx in 0usize..9_000, i in 1u64..1_000_000) {
            let primes = sieve_primes(100_000);
            let p = primes[idx % primes.len()];
            prop_assume!(p != 2 && p != 5);
            let s = spec(p);
            prop_assert_eq!(digit_at(&s, i).unwrap(), digit_at(&s, i + s.period()).unwrap());
        }

        #[test]
        fn digit_at_agrees_with_stream(idx in 0usize..1_200, frac in 0.0f64..1.0) {
            let primes = sieve_primes(10_000);
            let p = primes[idx % primes.len()];
            prop_assume!(p != 2 && p != 5);
            let s = spec(p);
            let i = 1 + ((s.period() - 1) as f64 * frac) as u64;
            let streamed = digit_stream(&s).nth(i as usize - 1).unwrap();
            prop_assert_eq!(digit_at(&s, i).unwrap(), streamed);
        }
    }
}
