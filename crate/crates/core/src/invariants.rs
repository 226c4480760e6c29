//! Structural rules over one-period digit counts.
//!
//! Each full- or half-length prime falls under exactly one of twelve rules,
//! picked by its last digit, length class and (for half length) the parity of
//! its tens digit. A rule is a list of sub-checks, each carrying a
//! [`CheckLevel`]:
//!
//! * `Hard` checks are algebraic consequences of the period length and must
//!   never fail.
//! * `Strong` checks are observed to hold for every prime but are unproven;
//!   failures are collected as data.
//! * `Soft` checks describe what holds for most primes; only pass rates are
//!   reported.
//!
//! Notation: `f(d)` is the period count of digit `d`, `m = floor(p / 10)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::batch::Batch;
use crate::census::{classify, odd_primes_up_to, LengthClass, Parity, PrimeProfile};
use crate::dseq::DigitHistogram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    FL1,
    FL3,
    FL7,
    FL9,
    HL1E,
    HL1O,
    HL3E,
    HL3O,
    HL7E,
    HL7O,
    HL9E,
    HL9O,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        RuleId::FL1,
        RuleId::FL3,
        RuleId::FL7,
        RuleId::FL9,
        RuleId::HL1E,
        RuleId::HL1O,
        RuleId::HL3E,
        RuleId::HL3O,
        RuleId::HL7E,
        RuleId::HL7O,
        RuleId::HL9E,
        RuleId::HL9O,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::FL1 => "FL1",
            RuleId::FL3 => "FL3",
            RuleId::FL7 => "FL7",
            RuleId::FL9 => "FL9",
            RuleId::HL1E => "HL1E",
            RuleId::HL1O => "HL1O",
            RuleId::HL3E => "HL3E",
            RuleId::HL3O => "HL3O",
            RuleId::HL7E => "HL7E",
            RuleId::HL7O => "HL7O",
            RuleId::HL9E => "HL9E",
            RuleId::HL9O => "HL9O",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckLevel {
    Hard,
    Strong,
    Soft,
}

impl fmt::Display for CheckLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckLevel::Hard => "HARD",
            CheckLevel::Strong => "STRONG",
            CheckLevel::Soft => "SOFT",
        })
    }
}

pub fn applicable_rule(profile: &PrimeProfile) -> Option<RuleId> {
    use RuleId::*;
    let key = profile.key;
    let rule = match (key.length_class, key.lsd, key.second_parity) {
        (LengthClass::Other, _, _) => return None,
        (LengthClass::Full, 1, _) => FL1,
        (LengthClass::Full, 3, _) => FL3,
        (LengthClass::Full, 7, _) => FL7,
        (LengthClass::Full, 9, _) => FL9,
        (LengthClass::Half, 1, Parity::Even) => HL1E,
        (LengthClass::Half, 1, Parity::Odd) => HL1O,
        (LengthClass::Half, 3, Parity::Even) => HL3E,
        (LengthClass::Half, 3, Parity::Odd) => HL3O,
        (LengthClass::Half, 7, Parity::Even) => HL7E,
        (LengthClass::Half, 7, Parity::Odd) => HL7O,
        (LengthClass::Half, 9, Parity::Even) => HL9E,
        (LengthClass::Half, 9, Parity::Odd) => HL9O,
        _ => return None,
    };
    Some(rule)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extreme {
    Max,
    Min,
}

#[derive(Debug, Clone)]
enum Predicate {
    /// All listed digits share one count.
    Equal(&'static [u8]),
    /// All listed digits have exactly this count.
    Exact(&'static [u8], u64),
    /// `f(d) + f(9 - d)` equals the value.
    PairSum(u8, u64),
    /// Period length.
    Total(u64),
    /// The set of extremal digits lies inside one of the groups.
    Within(Extreme, &'static [&'static [u8]]),
    /// The digit is the only extremal one.
    Unique(Extreme, u8),
}

#[derive(Debug, Clone)]
struct SubCheck {
    name: String,
    level: CheckLevel,
    predicate: Predicate,
}

const ALL_DIGITS: &[u8] = &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9];
const SIX: &[u8] = &[1, 2, 4, 5, 7, 8];

fn set_str(digits: &[u8]) -> String {
    let inner: Vec<String> = digits.iter().map(u8::to_string).collect();
    format!("{{{}}}", inner.join(" "))
}

fn chain(digits: &[u8]) -> String {
    digits
        .iter()
        .map(|d| format!("f({d})"))
        .collect::<Vec<_>>()
        .join("=")
}

struct Catalog {
    checks: Vec<SubCheck>,
}

impl Catalog {
    fn new() -> Self {
        Catalog { checks: Vec::new() }
    }

    fn push(&mut self, level: CheckLevel, name: String, predicate: Predicate) {
        self.checks.push(SubCheck {
            name,
            level,
            predicate,
        });
    }

    fn total(&mut self, value: u64, label: &str) {
        self.push(CheckLevel::Hard, format!("total={label}"), Predicate::Total(value));
    }

    fn exact(&mut self, digits: &'static [u8], value: u64, label: &str) {
        self.push(
            CheckLevel::Hard,
            format!("{}={label}", chain(digits)),
            Predicate::Exact(digits, value),
        );
    }

    fn equal(&mut self, digits: &'static [u8]) {
        self.push(CheckLevel::Strong, chain(digits), Predicate::Equal(digits));
    }

    fn complements_equal(&mut self) {
        const PAIRS: [&[u8]; 5] = [&[0, 9], &[1, 8], &[2, 7], &[3, 6], &[4, 5]];
        for pair in PAIRS {
            self.equal(pair);
        }
    }

    fn pair_sum(&mut self, d: u8, value: u64, label: &str) {
        self.push(
            CheckLevel::Strong,
            format!("f({d})+f({})={label}", 9 - d),
            Predicate::PairSum(d, value),
        );
    }

    fn within(&mut self, level: CheckLevel, extreme: Extreme, groups: &'static [&'static [u8]]) {
        let what = match extreme {
            Extreme::Max => "argmax",
            Extreme::Min => "argmin",
        };
        let alts: Vec<String> = groups.iter().map(|g| set_str(g)).collect();
        self.push(
            level,
            format!("{what} within {}", alts.join("|")),
            Predicate::Within(extreme, groups),
        );
    }

    fn unique(&mut self, extreme: Extreme, digit: u8) {
        let what = match extreme {
            Extreme::Max => "max",
            Extreme::Min => "min",
        };
        self.push(
            CheckLevel::Strong,
            format!("f({digit}) unique {what}"),
            Predicate::Unique(extreme, digit),
        );
    }
}

fn catalog(rule: RuleId, p: u64) -> Catalog {
    use CheckLevel::{Soft, Strong};
    use Extreme::{Max, Min};
    let m = p / 10;
    let mut c = Catalog::new();

    match rule {
        RuleId::FL1 | RuleId::FL3 | RuleId::FL7 | RuleId::FL9 => c.total(p - 1, "p-1"),
        _ => c.total((p - 1) / 2, "(p-1)/2"),
    }

    match rule {
        RuleId::FL1 => c.exact(ALL_DIGITS, (p - 1) / 10, "(p-1)/10"),
        RuleId::FL3 => {
            c.exact(&[3, 6], (p - 3) / 10 + 1, "(p-3)/10+1");
            c.exact(&[0, 1, 2, 4, 5, 7, 8, 9], (p - 3) / 10, "(p-3)/10");
        }
        RuleId::FL7 => {
            c.exact(&[0, 3, 6, 9], (p + 3) / 10 - 1, "(p+3)/10-1");
            c.exact(&[1, 2, 4, 5, 7, 8], (p + 3) / 10, "(p+3)/10");
        }
        RuleId::FL9 => {
            c.exact(&[0, 9], (p + 1) / 10 - 1, "(p+1)/10-1");
            c.exact(&[1, 2, 3, 4, 5, 6, 7, 8], (p + 1) / 10, "(p+1)/10");
        }
        RuleId::HL1E => {
            c.equal(&[0, 9]);
            c.equal(SIX);
            c.equal(&[3, 6]);
            c.within(Soft, Max, &[&[0, 9], SIX]);
            c.within(Soft, Min, &[&[3, 6], SIX]);
        }
        RuleId::HL1O => {
            for d in 0..5 {
                c.pair_sum(d, m, "m");
            }
            c.equal(&[1, 5, 6]);
            c.equal(&[3, 4, 8]);
            c.within(Strong, Max, &[&[0, 2]]);
            c.within(Strong, Min, &[&[7, 9]]);
        }
        RuleId::HL3E => {
            for d in [0, 1, 2, 4] {
                c.pair_sum(d, m, "m");
            }
            c.pair_sum(3, m + 1, "m+1");
            c.equal(&[0, 9]);
            c.equal(&[1, 4, 7]);
            c.equal(&[2, 5, 8]);
            c.unique(Max, 3);
            c.unique(Min, 6);
        }
        RuleId::HL3O | RuleId::HL7O => {
            c.complements_equal();
            c.within(Soft, Max, &[&[1, 8], &[2, 7], &[0, 9]]);
            c.within(Soft, Min, &[&[3, 6], &[4, 5], &[1, 8]]);
        }
        RuleId::HL7E => {
            c.pair_sum(0, m, "m");
            c.pair_sum(3, m, "m");
            for d in [1, 2, 4] {
                c.pair_sum(d, m + 1, "m+1");
            }
            c.equal(&[1, 4, 7]);
            c.equal(&[2, 5, 8]);
            c.unique(Max, 3);
            c.unique(Min, 6);
        }
        RuleId::HL9E => {
            c.complements_equal();
            c.equal(&[1, 2, 4]);
            c.equal(&[5, 7, 8]);
            c.within(Soft, Max, &[&[0, 9], SIX]);
            c.within(Soft, Min, &[&[3, 6], SIX]);
        }
        RuleId::HL9O => {
            c.pair_sum(0, m, "m");
            for d in 1..5 {
                c.pair_sum(d, m + 1, "m+1");
            }
            c.equal(&[1, 5, 6]);
            c.equal(&[3, 4, 8]);
            c.within(Strong, Max, &[&[0, 2]]);
            c.within(Strong, Min, &[&[7, 9]]);
        }
    }
    c
}

/// Names and levels of the sub-checks `rule` applies to prime `p`, in
/// evaluation order.
pub fn rule_checks(rule: RuleId, p: u64) -> Vec<(String, CheckLevel)> {
    catalog(rule, p)
        .checks
        .into_iter()
        .map(|c| (c.name, c.level))
        .collect()
}

/// Result of one sub-check. `passed` is `None` when the check was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub level: CheckLevel,
    pub passed: Option<bool>,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub p: u64,
    pub rule: RuleId,
    pub hard_passed: bool,
    pub strong_passed: bool,
    /// Soft sub-check name -> passed, in catalog order.
    pub soft_outcomes: Vec<(String, bool)>,
    /// Failed hard and strong sub-checks with the observed values.
    pub details: Vec<String>,
    pub checks: Vec<CheckOutcome>,
}

impl RuleReport {
    pub fn failures(&self, level: CheckLevel) -> impl Iterator<Item = &CheckOutcome> {
        self.checks
            .iter()
            .filter(move |c| c.level == level && c.passed == Some(false))
    }
}

fn evaluate(pred: &Predicate, hist: &DigitHistogram, p: u64) -> (Option<bool>, String) {
    let f = |d: u8| hist.count(d);
    match pred {
        Predicate::Equal(digits) => {
            let vals: Vec<String> = digits.iter().map(|&d| f(d).to_string()).collect();
            let ok = digits.iter().all(|&d| f(d) == f(digits[0]));
            (Some(ok), vals.join("/"))
        }
        Predicate::Exact(digits, value) => {
            let vals: Vec<String> = digits.iter().map(|&d| f(d).to_string()).collect();
            let ok = digits.iter().all(|&d| f(d) == *value);
            (Some(ok), format!("{} expected {value}", vals.join("/")))
        }
        Predicate::PairSum(d, value) => {
            let (a, b) = (f(*d), f(9 - d));
            (
                Some(a + b == *value),
                format!("{a}+{b}={} expected {value}", a + b),
            )
        }
        Predicate::Total(value) => (
            Some(hist.total() == *value),
            format!("{} expected {value}", hist.total()),
        ),
        // Periods of primes below 10 are too short for extremes to mean anything.
        Predicate::Within(..) | Predicate::Unique(..) if p <= 10 => {
            (None, "skipped for p <= 10".to_string())
        }
        Predicate::Within(extreme, groups) => {
            let set = match extreme {
                Extreme::Max => hist.argmax(),
                Extreme::Min => hist.argmin(),
            };
            let ok = groups
                .iter()
                .any(|g| set.iter().all(|d| g.contains(d)));
            (Some(ok), set_str(&set))
        }
        Predicate::Unique(extreme, digit) => {
            let set = match extreme {
                Extreme::Max => hist.argmax(),
                Extreme::Min => hist.argmin(),
            };
            let ok = set.as_slice() == [*digit];
            let observed = if set.len() > 1 {
                format!("tie {}", set_str(&set))
            } else {
                set_str(&set)
            };
            (Some(ok), observed)
        }
    }
}

/// Evaluates every sub-check of the rule that applies to `profile`.
pub fn check_histogram(profile: &PrimeProfile, hist: &DigitHistogram) -> Result<RuleReport> {
    let rule = applicable_rule(profile).ok_or(Error::NoApplicableRule(profile.p))?;
    let p = profile.p;

    let mut report = RuleReport {
        p,
        rule,
        hard_passed: true,
        strong_passed: true,
        soft_outcomes: Vec::new(),
        details: Vec::new(),
        checks: Vec::new(),
    };
    for check in catalog(rule, p).checks {
        let (passed, observed) = evaluate(&check.predicate, hist, p);
        match (check.level, passed) {
            (_, None) => {}
            (CheckLevel::Soft, Some(ok)) => report.soft_outcomes.push((check.name.clone(), ok)),
            (level, Some(false)) => {
                if level == CheckLevel::Hard {
                    report.hard_passed = false;
                } else {
                    report.strong_passed = false;
                }
                report
                    .details
                    .push(format!("{level} {}: {observed}", check.name));
            }
            (_, Some(true)) => {}
        }
        report.checks.push(CheckOutcome {
            name: check.name,
            level: check.level,
            passed,
            observed,
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoftRate {
    pub check: String,
    pub passed: u64,
    pub evaluated: u64,
}

impl SoftRate {
    pub fn rate(&self) -> Option<f64> {
        (self.evaluated > 0).then(|| self.passed as f64 / self.evaluated as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSummary {
    pub rule: RuleId,
    pub checked: u64,
    pub hard_failures: u64,
    pub strong_failures: u64,
    pub soft_rates: Vec<SoftRate>,
}

/// A failed hard or strong sub-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub p: u64,
    pub rule: RuleId,
    pub level: CheckLevel,
    pub check: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub limit: u64,
    pub rules: Vec<RuleSummary>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

/// Rule-specific remarks attached to every summary.
pub const NOTES: &[&str] = &[
    "HL3E: the complementary pair (3 6) sums to m+1 and is checked as f(3)+f(6)=m+1; \
     the other four pairs sum to m",
];

impl VerificationSummary {
    fn empty(limit: u64) -> Self {
        VerificationSummary {
            limit,
            rules: RuleId::ALL
                .iter()
                .map(|&rule| RuleSummary {
                    rule,
                    checked: 0,
                    hard_failures: 0,
                    strong_failures: 0,
                    soft_rates: Vec::new(),
                })
                .collect(),
            violations: Vec::new(),
            notes: NOTES.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn rule(&self, rule: RuleId) -> &RuleSummary {
        &self.rules[rule as usize]
    }

    pub fn total_checked(&self) -> u64 {
        self.rules.iter().map(|r| r.checked).sum()
    }

    pub fn hard_failures(&self) -> u64 {
        self.rules.iter().map(|r| r.hard_failures).sum()
    }

    pub fn strong_failures(&self) -> u64 {
        self.rules.iter().map(|r| r.strong_failures).sum()
    }

    /// Folds one report in. Reports must arrive in ascending prime order for
    /// the violation list to be ordered.
    pub fn absorb(&mut self, report: &RuleReport) {
        let summary = &mut self.rules[report.rule as usize];
        summary.checked += 1;
        summary.hard_failures += u64::from(!report.hard_passed);
        summary.strong_failures += u64::from(!report.strong_passed);
        for (name, ok) in &report.soft_outcomes {
            let idx = match summary.soft_rates.iter().position(|r| &r.check == name) {
                Some(i) => i,
                None => {
                    summary.soft_rates.push(SoftRate {
                        check: name.clone(),
                        passed: 0,
                        evaluated: 0,
                    });
                    summary.soft_rates.len() - 1
                }
            };
            let rate = &mut summary.soft_rates[idx];
            rate.evaluated += 1;
            rate.passed += u64::from(*ok);
        }
        for level in [CheckLevel::Hard, CheckLevel::Strong] {
            for failure in report.failures(level) {
                self.violations.push(Violation {
                    p: report.p,
                    rule: report.rule,
                    level,
                    check: failure.name.clone(),
                    observed: failure.observed.clone(),
                });
            }
        }
    }
}

pub fn verify_range(limit: u64) -> VerificationSummary {
    verify_range_in(&mut Batch::default(), limit).expect("verification without a cache cannot fail")
}

/// Checks every full- and half-length prime `<= limit`.
pub fn verify_range_in(batch: &mut Batch<'_>, limit: u64) -> Result<VerificationSummary> {
    let primes = odd_primes_up_to(limit);
    let profiles = batch.try_map(&primes, classify)?;
    let checked: Vec<u64> = profiles
        .iter()
        .filter(|pr| applicable_rule(pr).is_some())
        .map(|pr| pr.p)
        .collect();

    let records = batch.records(&checked)?;
    let mut summary = VerificationSummary::empty(limit);
    for record in records {
        let profile = classify(record.p)?;
        let report = check_histogram(&profile, &record.histogram())?;
        summary.absorb(&report);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dseq::{histogram, long_division_digits};

    fn table1_601() -> DigitHistogram {
        DigitHistogram::from_counts([35, 28, 28, 31, 28, 28, 31, 28, 28, 35])
    }

    fn oracle_hist(p: u64) -> DigitHistogram {
        let t = classify(p).unwrap().period as usize;
        long_division_digits(p, t).unwrap().into_iter().collect()
    }

    #[test]
    fn applicable_rule_examples() {
        assert_eq!(applicable_rule(&classify(601).unwrap()), Some(RuleId::HL1E));
        assert_eq!(applicable_rule(&classify(7).unwrap()), Some(RuleId::FL7));
        assert_eq!(applicable_rule(&classify(11).unwrap()), None);
        assert_eq!(applicable_rule(&classify(3).unwrap()), Some(RuleId::HL3E));
        assert_eq!(applicable_rule(&classify(919).unwrap()), Some(RuleId::HL9O));
    }

    #[test]
    fn table_row_601_passes() {
        let report = check_histogram(&classify(601).unwrap(), &table1_601()).unwrap();
        assert_eq!(report.rule, RuleId::HL1E);
        assert!(report.hard_passed);
        assert!(report.strong_passed);
        assert!(report.details.is_empty());
    }

    #[test]
    fn table_row_2203_uses_corrected_pair_sum() {
        let hist = DigitHistogram::from_counts([110, 101, 119, 127, 101, 119, 94, 101, 119, 110]);
        let report = check_histogram(&classify(2203).unwrap(), &hist).unwrap();
        assert_eq!(report.rule, RuleId::HL3E);
        assert!(report.hard_passed);
        assert!(report.strong_passed, "{:?}", report.details);
        let pair = report
            .checks
            .iter()
            .find(|c| c.name == "f(3)+f(6)=m+1")
            .unwrap();
        assert_eq!(pair.passed, Some(true));
        assert_eq!(pair.observed, "127+94=221 expected 221");
    }

    #[test]
    fn perturbed_row_fails() {
        let mut counts = *table1_601().counts();
        counts[0] += 1;
        let report =
            check_histogram(&classify(601).unwrap(), &DigitHistogram::from_counts(counts)).unwrap();
        assert!(!report.hard_passed);
        assert!(!report.strong_passed);
        assert!(report.details.iter().any(|d| d.starts_with("HARD total=(p-1)/2")));
        assert!(report.details.iter().any(|d| d.contains("f(0)=f(9): 36/35")));
    }

    #[test]
    fn other_class_is_rejected() {
        let profile = classify(11).unwrap();
        assert!(matches!(
            check_histogram(&profile, &histogram(&profile.spec())),
            Err(Error::NoApplicableRule(11))
        ));
    }

    #[test]
    fn full_length_anchors() {
        assert_eq!(oracle_hist(7).counts(), &[0, 1, 1, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(oracle_hist(19).counts(), &[1, 2, 2, 2, 2, 2, 2, 2, 2, 1]);
        for (p, rule) in [(7, RuleId::FL7), (19, RuleId::FL9), (23, RuleId::FL3), (61, RuleId::FL1)] {
            let profile = classify(p).unwrap();
            let report = check_histogram(&profile, &oracle_hist(p)).unwrap();
            assert_eq!(report.rule, rule);
            assert!(report.hard_passed, "p = {p}: {:?}", report.details);
        }
    }

    #[test]
    fn unique_max_reports_ties() {
        // 2203 with a forced tie between 3 and 2 at the top.
        let hist = DigitHistogram::from_counts([110, 101, 127, 127, 101, 119, 94, 101, 119, 110]);
        let report = check_histogram(&classify(2203).unwrap(), &hist).unwrap();
        let max = report.checks.iter().find(|c| c.name == "f(3) unique max").unwrap();
        assert_eq!(max.passed, Some(false));
        assert_eq!(max.observed, "tie {2 3}");
    }

    #[test]
    fn extremes_skipped_for_tiny_primes() {
        let profile = classify(3).unwrap();
        let report = check_histogram(&profile, &histogram(&profile.spec())).unwrap();
        assert!(report.hard_passed && report.strong_passed);
        assert!(report
            .checks
            .iter()
            .filter(|c| c.name.contains("unique"))
            .all(|c| c.passed.is_none()));
    }

    #[test]
    fn every_check_has_a_level_and_rules_have_totals() {
        for rule in RuleId::ALL {
            let checks = rule_checks(rule, 1_000_003);
            assert_eq!(checks[0].1, CheckLevel::Hard);
            assert!(checks[0].0.starts_with("total="));
        }
    }

    #[test]
    fn verify_small_ranges() {
        let s = verify_range(10);
        assert_eq!(s.total_checked(), 2);
        assert_eq!(s.rule(RuleId::HL3E).checked, 1);
        assert_eq!(s.rule(RuleId::FL7).checked, 1);

        let s = verify_range(2);
        assert_eq!(s.total_checked(), 0);
        assert_eq!(s.rules.len(), 12);
        assert!(s.violations.is_empty());
    }

    #[test]
    fn verify_to_1000_has_no_hard_failures() {
        let s = verify_range(1000);
        assert_eq!(s.hard_failures(), 0);
        let full_or_half = odd_primes_up_to(1000)
            .into_iter()
            .filter(|&p| classify(p).unwrap().cofactor <= 2)
            .count() as u64;
        assert_eq!(s.total_checked(), full_or_half);
    }
}
