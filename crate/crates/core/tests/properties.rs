use proptest::prelude::*;

use dseq_core::census::odd_primes_up_to;
use dseq_core::invariants::{check_histogram, verify_range_in};
use dseq_core::store::{CacheRecord, Store};
use dseq_core::{
    applicable_rule, classify, global_digit_census, histogram, multiplicative_order, Batch,
    DigitHistogram,
};

#[test]
fn order_divides_group_order_to_1e4() {
    for p in odd_primes_up_to(10_000) {
        let t = multiplicative_order(10, p).unwrap();
        assert_eq!((p - 1) % t, 0, "p = {p}");
    }
}

#[test]
fn census_is_additive_to_1e3() {
    let mut direct = DigitHistogram::new();
    for p in odd_primes_up_to(1000) {
        direct.merge(&histogram(&classify(p).unwrap().spec()));
    }
    assert_eq!(global_digit_census(1000), direct);
}

#[test]
fn checked_count_matches_full_and_half_primes() {
    let limit = 20_000;
    let expected = odd_primes_up_to(limit)
        .into_iter()
        .filter(|&p| classify(p).unwrap().cofactor <= 2)
        .count() as u64;
    let summary = verify_range_in(&mut Batch::new(2), limit).unwrap();
    assert_eq!(summary.total_checked(), expected);
    assert_eq!(summary.hard_failures(), 0);
}

#[test]
fn exactly_one_rule_for_full_and_half_primes() {
    for p in odd_primes_up_to(20_000) {
        let profile = classify(p).unwrap();
        assert_eq!(
            applicable_rule(&profile).is_some(),
            profile.cofactor <= 2,
            "p = {p}"
        );
    }
}

#[test]
fn hard_passed_iff_all_hard_checks_pass() {
    for p in odd_primes_up_to(3000) {
        let profile = classify(p).unwrap();
        if applicable_rule(&profile).is_none() {
            continue;
        }
        let mut counts = *histogram(&profile.spec()).counts();
        counts[(p % 10) as usize] += 1;
        let report = check_histogram(&profile, &DigitHistogram::from_counts(counts)).unwrap();
        assert!(!report.hard_passed, "p = {p}");
        assert_eq!(
            report.hard_passed,
            report.failures(dseq_core::CheckLevel::Hard).next().is_none()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn store_round_trip(idx in 0usize..9590) {
        let primes = odd_primes_up_to(100_000);
        let p = primes[idx % primes.len()];
        let profile = classify(p).unwrap();
        let record = CacheRecord::new(&profile, &histogram(&profile.spec()));

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.csv");
        {
            let mut store = Store::open(&path).unwrap();
            store.append(record).unwrap();
            prop_assert_eq!(store.lookup(p), Some(&record));
        }
        let reopened = Store::open(&path).unwrap();
        prop_assert_eq!(reopened.lookup(p), Some(&record));
        prop_assert_eq!(reopened.len(), 1);
    }
}
