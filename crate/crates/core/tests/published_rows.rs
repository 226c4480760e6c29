//! Spot rows from the published frequency tables, including the extremes of
//! the prime range.

use dseq_core::census::class_census;
use dseq_core::invariants::{check_histogram, RuleId};
use dseq_core::tables::{table, TABLES};
use dseq_core::{classify, CheckLevel};

const ROWS: &[(u8, u64, [u64; 10])] = &[
    (1, 965_801, [48395, 48350, 48350, 48005, 48350, 48350, 48005, 48350, 48350, 48395]),
    (2, 997_511, [50165, 49925, 50024, 49826, 49826, 49925, 49925, 49727, 49826, 49586]),
    (3, 2203, [110, 101, 119, 127, 101, 119, 94, 101, 119, 110]),
    (4, 5413, [278, 267, 282, 267, 259, 259, 267, 282, 267, 278]),
    (5, 307, [15, 13, 18, 22, 13, 18, 8, 13, 18, 15]),
    (6, 999_917, [49975, 50129, 50088, 49883, 49904, 49904, 49883, 50088, 50129, 49975]),
    (7, 409, [24, 19, 19, 21, 19, 19, 21, 19, 19, 24]),
    (8, 989_999, [50242, 49530, 49590, 49470, 49470, 49530, 49530, 49410, 49470, 48757]),
];

#[test]
fn spot_rows() {
    for &(n, p, counts) in ROWS {
        let t = table(n).unwrap();
        assert!(t.primes.contains(&p));
        let rows = class_census(&[p], t.key()).unwrap();
        assert_eq!(rows[0].histogram.counts(), &counts, "table {n} prime {p}");
    }
}

#[test]
fn every_tabulated_prime_passes_its_rule() {
    let rules = [
        RuleId::HL1E,
        RuleId::HL1O,
        RuleId::HL3E,
        RuleId::HL3O,
        RuleId::HL7E,
        RuleId::HL7O,
        RuleId::HL9E,
        RuleId::HL9O,
    ];
    for (t, rule) in TABLES.iter().zip(rules) {
        let rows = class_census(t.primes, t.key()).unwrap();
        for row in rows {
            let report = check_histogram(&classify(row.p).unwrap(), &row.histogram).unwrap();
            assert_eq!(report.rule, rule);
            assert!(report.hard_passed && report.strong_passed, "{}: {:?}", row.p, report.details);
            assert!(report.failures(CheckLevel::Strong).next().is_none());
        }
    }
}
