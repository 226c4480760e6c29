//! Text renderings: CSV, JSON and the bar-chart SVG.

use std::fmt::Write as _;

use serde::Serialize;

use dseq_core::census::{ParityScanReport, PrimeProfile};
use dseq_core::invariants::VerificationSummary;
use dseq_core::{CensusRow, DigitHistogram, Digit};

const CSV_COUNTS_HEADER: &str = "prime,c0,c1,c2,c3,c4,c5,c6,c7,c8,c9";

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Digits without separators, wrapped every 80 characters.
pub fn digits(stream: impl Iterator<Item = Digit>) -> String {
    let mut out = String::new();
    let mut col = 0;
    for d in stream {
        out.push((b'0' + d.value()) as char);
        col += 1;
        if col == 80 {
            out.push('\n');
            col = 0;
        }
    }
    if col > 0 {
        out.push('\n');
    }
    out
}

pub fn rows_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CSV_COUNTS_HEADER);
    out.push('\n');
    for row in rows {
        write!(out, "{}", row.p).unwrap();
        for c in row.histogram.counts() {
            write!(out, ",{c}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    prime: u64,
    counts: [u64; 10],
    total: u64,
}

#[derive(Serialize)]
pub struct RowsDocument<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<u8>,
    pub lsd: u8,
    pub second_parity: &'a str,
    pub length_class: &'a str,
    rows: Vec<JsonRow>,
}

impl<'a> RowsDocument<'a> {
    pub fn new(
        table: Option<u8>,
        lsd: u8,
        second_parity: &'a str,
        length_class: &'a str,
        rows: &[CensusRow],
    ) -> Self {
        RowsDocument {
            table,
            lsd,
            second_parity,
            length_class,
            rows: rows
                .iter()
                .map(|r| JsonRow {
                    prime: r.p,
                    counts: *r.histogram.counts(),
                    total: r.histogram.total(),
                })
                .collect(),
        }
    }
}

pub fn profile_csv(pr: &PrimeProfile) -> String {
    format!(
        "prime,l,period,cofactor,lsd,second_parity,length_class\n{},{},{},{},{},{},{}\n",
        pr.p, pr.l, pr.period, pr.cofactor, pr.key.lsd, pr.key.second_parity, pr.key.length_class
    )
}

#[derive(Serialize)]
pub struct ProfileDocument {
    prime: u64,
    l: u8,
    period: u64,
    cofactor: u64,
    lsd: u8,
    second_parity: &'static str,
    length_class: &'static str,
}

impl From<&PrimeProfile> for ProfileDocument {
    fn from(pr: &PrimeProfile) -> Self {
        ProfileDocument {
            prime: pr.p,
            l: pr.l,
            period: pr.period,
            cofactor: pr.cofactor,
            lsd: pr.key.lsd,
            second_parity: pr.key.second_parity.as_str(),
            length_class: pr.key.length_class.as_str(),
        }
    }
}

pub fn figure_csv(hist: &DigitHistogram) -> String {
    let mut out = String::from("digit,count\n");
    for (d, c) in hist.counts().iter().enumerate() {
        writeln!(out, "{d},{c}").unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct FigureDocument<'a> {
    pub limit: u64,
    pub scope: &'a str,
    pub counts: [u64; 10],
    pub total: u64,
}

/// Ten-bar chart of digit counts. Self-contained, no external references.
pub fn figure_svg(hist: &DigitHistogram, limit: u64) -> String {
    const WIDTH: u32 = 640;
    const HEIGHT: u32 = 400;
    const LEFT: u32 = 90;
    const RIGHT: u32 = 20;
    const TOP: u32 = 40;
    const BOTTOM: u32 = 60;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let slot = plot_w / 10;
    let bar_w = slot * 7 / 10;

    let max = hist.counts().iter().copied().max().unwrap_or(0);
    // Bars start from the smallest count rounded down, so small differences
    // between digits stay visible.
    let min = hist.counts().iter().copied().min().unwrap_or(0);
    let base = round_down(min.saturating_sub((max - min) / 4));
    let span = (max - base).max(1);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<title>Digit frequencies of 1/p over primes up to {limit}</title>"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">Digit frequencies, primes up to {limit}</text>"#,
        WIDTH / 2
    )
    .unwrap();

    let y_of = |v: u64| TOP + plot_h - ((v - base) as u128 * plot_h as u128 / span as u128) as u32;
    for tick in 0..=4u64 {
        let v = base + span * tick / 4;
        let y = y_of(v);
        writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y}" x2="{}" y2="{y}" stroke="#ddd"/>"##,
            WIDTH - RIGHT
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{v}</text>"#,
            LEFT - 6,
            y + 4
        )
        .unwrap();
    }
    for (d, &c) in hist.counts().iter().enumerate() {
        let x = LEFT + d as u32 * slot + (slot - bar_w) / 2;
        let y = y_of(c);
        writeln!(
            s,
            r##"<rect x="{x}" y="{y}" width="{bar_w}" height="{}" fill="#4a6fa5"><title>{d}: {c}</title></rect>"##,
            TOP + plot_h - y
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{d}</text>"#,
            x + bar_w / 2,
            TOP + plot_h + 18
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<line x1="{LEFT}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        TOP + plot_h,
        WIDTH - RIGHT,
        TOP + plot_h
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{}" stroke="black"/>"#,
        TOP + plot_h
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">digit</text>"#,
        LEFT + plot_w / 2,
        HEIGHT - 16
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">count</text>"#,
        TOP + plot_h / 2,
        TOP + plot_h / 2
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

fn round_down(v: u64) -> u64 {
    if v < 10 {
        return 0;
    }
    let mut unit = 1;
    while unit * 10 <= v {
        unit *= 10;
    }
    unit /= 10;
    v / unit * unit
}

pub fn verify_csv(summary: &VerificationSummary) -> String {
    let mut out = String::from("rule,checked,hard_failures,strong_failures,soft_rates\n");
    for r in &summary.rules {
        let soft: Vec<String> = r
            .soft_rates
            .iter()
            .map(|s| format!("{}={}/{}", s.check, s.passed, s.evaluated))
            .collect();
        writeln!(
            out,
            "{},{},{},{},{}",
            r.rule,
            r.checked,
            r.hard_failures,
            r.strong_failures,
            soft.join(";")
        )
        .unwrap();
    }
    out.push('\n');
    out.push_str("prime,rule,level,check,observed\n");
    for v in &summary.violations {
        writeln!(out, "{},{},{},{},{}", v.p, v.rule, v.level, v.check, v.observed).unwrap();
    }
    for note in &summary.notes {
        writeln!(out, "# {}", note.replace(',', ";")).unwrap();
    }
    out
}

pub fn parity_csv(report: &ParityScanReport) -> String {
    let mut out = String::from("lsd,second_digit,third_parity,count\n");
    for (&(lsd, b), cell) in &report.cells {
        let parities: Vec<&str> = cell.parities().iter().map(|p| p.as_str()).collect();
        writeln!(out, "{lsd},{b},{},{}", parities.join("|"), cell.samples()).unwrap();
    }
    out
}

#[derive(Serialize)]
struct ParityCellDocument {
    lsd: u8,
    second_digit: u8,
    parities: Vec<&'static str>,
    even: u64,
    odd: u64,
}

#[derive(Serialize)]
pub struct ParityDocument {
    limit: u64,
    cells: Vec<ParityCellDocument>,
    mixed_cells: Vec<(u8, u8)>,
    alternation_violations: Vec<(u8, u8)>,
}

impl From<&ParityScanReport> for ParityDocument {
    fn from(report: &ParityScanReport) -> Self {
        ParityDocument {
            limit: report.limit,
            cells: report
                .cells
                .iter()
                .map(|(&(lsd, b), c)| ParityCellDocument {
                    lsd,
                    second_digit: b,
                    parities: c.parities().iter().map(|p| p.as_str()).collect(),
                    even: c.even,
                    odd: c.odd,
                })
                .collect(),
            mixed_cells: report.mixed_cells(),
            alternation_violations: report.alternation_violations(),
        }
    }
}
