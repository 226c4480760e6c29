//! Integer primitives: prime enumeration, primality, modular exponentiation,
//! factorization and multiplicative order.
//!
//! Everything here is a pure function over `u64`. Products are formed in
//! `u128` so no intermediate can overflow regardless of the modulus.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Largest prime accepted by the sequence generator (2^31 - 1).
pub const PRIME_CAP: u64 = (1 << 31) - 1;

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Prime -> exponent, ascending by prime.
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|(&p, &e)| p.pow(e))
            .product()
    }

    /// Euler's totient of `n`.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|(&p, &e)| (p - 1) * p.pow(e - 1))
            .product()
    }
}

/// All primes `<= limit` in ascending order.
///
/// Odd-only sieve packed into `u64` words: bit `i` stands for `2i + 1`.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let half = (limit as usize - 1) / 2 + 1; // odd numbers 1, 3, ..., <= limit
    let mut composite = vec![0u64; half.div_ceil(64)];
    let set = |bits: &mut [u64], i: usize| bits[i >> 6] |= 1 << (i & 63);
    let get = |bits: &[u64], i: usize| bits[i >> 6] & (1 << (i & 63)) != 0;

    let mut i = 1;
    while {
        let p = 2 * i + 1;
        p * p <= limit as usize
    } {
        if !get(&composite, i) {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                set(&mut composite, j);
                j += p;
            }
        }
        i += 1;
    }

    let mut primes = Vec::with_capacity(estimate_prime_count(limit));
    primes.push(2);
    primes.extend(
        (1..half)
            .filter(|&i| !get(&composite, i))
            .map(|i| 2 * i as u64 + 1),
    );
    primes
}

fn estimate_prime_count(limit: u64) -> usize {
    let x = limit as f64;
    if x < 17.0 {
        return 8;
    }
    (1.26 * x / x.ln()) as usize
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus`, with `pow_mod(_, 0, m) == 1 % m`.
///
/// # Panics
///
/// Panics if `modulus` is zero.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "pow_mod modulus must be positive");
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    result
}

// Witnesses that make Miller-Rabin deterministic for every n < 2^64.
const MR_WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Deterministic primality test for any `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 37 * 37 {
        return true;
    }

    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &MR_WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factorizes `n` by trial division, stopping early once the remaining
/// cofactor is prime.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "cannot factorize 0");
    let mut factors = BTreeMap::new();
    let mut rest = n;

    for p in [2u64, 3] {
        while rest.is_multiple_of(p) {
            *factors.entry(p).or_insert(0) += 1;
            rest /= p;
        }
    }
    // 6k +- 1 wheel
    let mut d = 5u64;
    let mut step = 2;
    while rest > 1 && d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            while rest.is_multiple_of(d) {
                *factors.entry(d).or_insert(0) += 1;
                rest /= d;
            }
            if is_prime(rest) {
                break;
            }
        }
        d += step;
        step = 6 - step;
    }
    if rest > 1 {
        *factors.entry(rest).or_insert(0) += 1;
    }
    Factorization { n, factors }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest `t >= 1` with `a^t = 1 (mod m)`.
///
/// Starts from the group order (m - 1 for prime m, Euler's totient otherwise)
/// and strips prime factors while the power stays at 1.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::NotCoprime { base: a, modulus: m });
    }
    let group_order = if is_prime(m) {
        factorize(m - 1)
    } else {
        factorize(factorize(m).totient())
    };

    let mut order = group_order.n();
    for (&q, &e) in group_order.factors() {
        for _ in 0..e {
            if pow_mod(a, order / q, m) == 1 {
                order /= q;
            } else {
                break;
            }
        }
    }
    Ok(order)
}
