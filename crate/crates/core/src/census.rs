//! Classification of primes by ending and period length, digit census over
//! prime ranges, and the hundreds-digit parity scan.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::batch::Batch;
use crate::dseq::{validate_prime, DigitHistogram, ReciprocalSpec};
use crate::error::{Error, Result};
use crate::numtheory::sieve_primes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the period compares to `p - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    /// `T = p - 1`
    Full,
    /// `T = (p - 1) / 2`
    Half,
    Other,
}

impl LengthClass {
    pub fn from_cofactor(k: u64) -> Self {
        match k {
            1 => LengthClass::Full,
            2 => LengthClass::Half,
            _ => LengthClass::Other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LengthClass::Full => "full",
            LengthClass::Half => "half",
            LengthClass::Other => "other",
        }
    }
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Last digit, parity of the tens digit, and length class of a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassKey {
    pub lsd: u8,
    pub second_parity: Parity,
    pub length_class: LengthClass,
}

impl ClassKey {
    pub fn new(lsd: u8, second_parity: Parity, length_class: LengthClass) -> Self {
        ClassKey {
            lsd,
            second_parity,
            length_class,
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lsd={} {} {}",
            self.lsd, self.second_parity, self.length_class
        )
    }
}

/// Everything about a prime except its digit counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeProfile {
    pub p: u64,
    pub l: u8,
    pub period: u64,
    /// `(p - 1) / period`
    pub cofactor: u64,
    pub key: ClassKey,
}

impl PrimeProfile {
    pub fn from_spec(spec: &ReciprocalSpec) -> Self {
        let p = spec.p();
        let cofactor = (p - 1) / spec.period();
        PrimeProfile {
            p,
            l: spec.l(),
            period: spec.period(),
            cofactor,
            key: ClassKey {
                lsd: (p % 10) as u8,
                second_parity: Parity::of(p / 10),
                length_class: LengthClass::from_cofactor(cofactor),
            },
        }
    }

    pub fn spec(&self) -> ReciprocalSpec {
        // Profiles are only built from validated specs.
        ReciprocalSpec::new(self.p).expect("profile holds a validated prime")
    }

    /// `floor(p / 10)`
    pub fn m(&self) -> u64 {
        self.p / 10
    }
}

pub fn classify(p: u64) -> Result<PrimeProfile> {
    validate_prime(p)?;
    Ok(PrimeProfile::from_spec(&ReciprocalSpec::new(p)?))
}

/// One row of a frequency table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub p: u64,
    pub histogram: DigitHistogram,
}

/// Rows for `primes`, in input order, all of which must belong to `key`.
pub fn class_census(primes: &[u64], key: ClassKey) -> Result<Vec<CensusRow>> {
    class_census_in(&mut Batch::default(), primes, key)
}

pub fn class_census_in(batch: &mut Batch<'_>, primes: &[u64], key: ClassKey) -> Result<Vec<CensusRow>> {
    let profiles = batch.try_map(primes, classify)?;
    let offenders: Vec<u64> = profiles
        .iter()
        .filter(|pr| pr.key != key)
        .map(|pr| pr.p)
        .collect();
    if !offenders.is_empty() {
        return Err(Error::KeyMismatch {
            key: key.to_string(),
            offenders,
        });
    }
    let records = batch.records(primes)?;
    Ok(records
        .into_iter()
        .map(|r| CensusRow {
            p: r.p,
            histogram: r.histogram(),
        })
        .collect())
}

/// All primes `<= limit` other than 2 and 5.
pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    sieve_primes(limit)
        .into_iter()
        .filter(|&p| p != 2 && p != 5)
        .collect()
}

/// Primes `<= limit` that classify to `key`.
pub fn primes_in_class(batch: &mut Batch<'_>, limit: u64, key: ClassKey) -> Result<Vec<u64>> {
    let primes = odd_primes_up_to(limit);
    let profiles = batch.try_map(&primes, classify)?;
    Ok(profiles
        .into_iter()
        .filter(|pr| pr.key == key)
        .map(|pr| pr.p)
        .collect())
}

/// Which length classes contribute to the global census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CensusScope {
    #[default]
    AllPrimes,
    FullAndHalf,
}

/// Summed one-period histograms over every prime `<= limit` except 2 and 5.
pub fn global_digit_census(limit: u64) -> DigitHistogram {
    global_digit_census_in(&mut Batch::default(), limit, CensusScope::AllPrimes)
        .expect("census without a cache cannot fail")
}

pub fn global_digit_census_in(
    batch: &mut Batch<'_>,
    limit: u64,
    scope: CensusScope,
) -> Result<DigitHistogram> {
    let mut primes = odd_primes_up_to(limit);
    if scope == CensusScope::FullAndHalf {
        let profiles = batch.try_map(&primes, classify)?;
        primes = profiles
            .into_iter()
            .filter(|pr| pr.key.length_class != LengthClass::Other)
            .map(|pr| pr.p)
            .collect();
    }
    let mut total = DigitHistogram::new();
    for record in batch.records(&primes)? {
        total.merge(&record.histogram());
    }
    Ok(total)
}

/// Observed hundreds-digit parities for one (last digit, tens digit) cell.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCell {
    pub even: u64,
    pub odd: u64,
}

impl ParityCell {
    pub fn samples(&self) -> u64 {
        self.even + self.odd
    }

    pub fn parities(&self) -> Vec<Parity> {
        let mut out = Vec::with_capacity(2);
        if self.even > 0 {
            out.push(Parity::Even);
        }
        if self.odd > 0 {
            out.push(Parity::Odd);
        }
        out
    }

    /// The only parity seen, if exactly one was.
    pub fn singleton(&self) -> Option<Parity> {
        match (self.even > 0, self.odd > 0) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }
}

/// Hundreds-digit parities of half-length primes, keyed by (last digit,
/// tens digit).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParityScanReport {
    pub limit: u64,
    pub cells: BTreeMap<(u8, u8), ParityCell>,
}

impl ParityScanReport {
    pub fn cell(&self, lsd: u8, second: u8) -> Option<&ParityCell> {
        self.cells.get(&(lsd, second))
    }

    /// Cells where both parities occur.
    pub fn mixed_cells(&self) -> Vec<(u8, u8)> {
        self.cells
            .iter()
            .filter(|(_, c)| c.singleton().is_none() && c.samples() > 0)
            .map(|(&k, _)| k)
            .collect()
    }

    /// `(lsd, b)` pairs where the cells for `b` and `b + 2` are both
    /// singletons with the same parity.
    pub fn alternation_violations(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for (&(lsd, b), cell) in &self.cells {
            if b > 7 {
                continue;
            }
            let (Some(here), Some(next)) = (
                cell.singleton(),
                self.cell(lsd, b + 2).and_then(ParityCell::singleton),
            ) else {
                continue;
            };
            if here == next {
                out.push((lsd, b));
            }
        }
        out
    }
}

pub fn third_digit_parity_scan(limit: u64) -> ParityScanReport {
    third_digit_parity_scan_in(&Batch::default(), limit)
}

pub fn third_digit_parity_scan_in(batch: &Batch<'_>, limit: u64) -> ParityScanReport {
    let primes: Vec<u64> = odd_primes_up_to(limit)
        .into_iter()
        .filter(|&p| p >= 100)
        .collect();
    let profiles = batch
        .try_map(&primes, classify)
        .expect("sieved primes always classify");
    let mut cells: BTreeMap<(u8, u8), ParityCell> = BTreeMap::new();
    for pr in profiles
        .iter()
        .filter(|pr| pr.key.length_class == LengthClass::Half)
    {
        let second = (pr.p / 10 % 10) as u8;
        let cell = cells.entry((pr.key.lsd, second)).or_default();
        match Parity::of(pr.p / 100 % 10) {
            Parity::Even => cell.even += 1,
            Parity::Odd => cell.odd += 1,
        }
    }
    ParityScanReport { limit, cells }
}
