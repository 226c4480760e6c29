//! `dseq` command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and writes its output;
//! the binary is a thin wrapper so tests can drive commands in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dseq_core::census::{
    class_census_in, global_digit_census_in, primes_in_class, third_digit_parity_scan_in,
};
use dseq_core::invariants::verify_range_in;
use dseq_core::store::DEFAULT_CACHE_FILE;
use dseq_core::{
    classify, digit_stream, tables, Batch, CensusScope, ClassKey, LengthClass, Parity,
    ReciprocalSpec, Store,
};

pub mod render;

/// Default range for figure, census, verify and scan-parity.
pub const DEFAULT_LIMIT: u64 = 100_000;
/// Largest prime below one million; `--full-range` runs up to it.
pub const FULL_RANGE_LIMIT: u64 = 999_983;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_HARD_FAILURE: i32 = 2;
pub const EXIT_CACHE_CORRUPTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dseq", version, about = "Decimal prime reciprocal sequences")]
pub struct Cli {
    /// Cache file for computed periods and digit counts.
    #[arg(long, global = true, env = "DSEQ_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Disable the results cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    All,
    FullHalf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Full,
    Half,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

/// Range limit and output format, given positionally or as flags.
#[derive(Debug, Args)]
struct RangeArgs {
    /// Upper bound on primes (default 100000).
    #[arg(value_name = "LIMIT", conflicts_with = "limit")]
    limit_pos: Option<u64>,

    /// Output format (default csv).
    #[arg(value_name = "FORMAT", conflicts_with = "format")]
    format_pos: Option<OutputFormat>,

    /// Upper bound on primes.
    #[arg(long)]
    limit: Option<u64>,

    #[arg(long, value_enum)]
    format: Option<OutputFormat>,

    /// Run over all primes below one million. Use --format to pick the output.
    #[arg(long, conflicts_with_all = ["limit", "limit_pos"])]
    full_range: bool,
}

impl RangeArgs {
    fn limit(&self) -> u64 {
        if self.full_range {
            FULL_RANGE_LIMIT
        } else {
            self.limit.or(self.limit_pos).unwrap_or(DEFAULT_LIMIT)
        }
    }

    fn format(&self) -> OutputFormat {
        self.format.or(self.format_pos).unwrap_or(OutputFormat::Csv)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first N digits of 1/P.
    Digits { p: u64, n: u64 },
    /// Multiplier, period and class of a prime.
    Profile {
        p: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Recompute one of the eight half-length frequency tables.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=8))]
        number: u8,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Aggregate digit frequencies over all primes up to a limit.
    Figure {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value = "all")]
        scope: ScopeArg,
    },
    /// Frequency rows for every prime up to a limit in one class.
    Census {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        lsd: u8,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long = "class", value_enum, default_value = "half")]
        class: ClassArg,
    },
    /// Check the structural digit-count rules over a range.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Hundreds-digit parity of half-length primes by last two digits.
    ScanParity {
        #[command(flatten)]
        range: RangeArgs,
    },
}

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn reject_format(format: OutputFormat, allowed: &[OutputFormat]) -> anyhow::Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        bail!("format {format:?} is not supported by this command")
    }
}

impl Cli {
    fn open_store(&self) -> anyhow::Result<Option<Store>> {
        if self.no_cache {
            return Ok(None);
        }
        let path = self
            .cache
            .clone()
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_FILE));
        Ok(Some(Store::open(&path)?))
    }

    /// Runs the parsed command.
    pub fn execute(&self) -> anyhow::Result<Outcome> {
        use OutputFormat::*;
        let ok = |stdout: String| Ok(Outcome { stdout, code: EXIT_OK });

        match &self.command {
            Command::Digits { p, n } => {
                let spec = ReciprocalSpec::new(*p)?;
                ok(render::digits(digit_stream(&spec).cycle().take(*n as usize)))
            }
            Command::Profile { p, format } => {
                reject_format(*format, &[Csv, Json])?;
                let profile = classify(*p)?;
                ok(match format {
                    Json => render::json(&render::ProfileDocument::from(&profile)),
                    _ => render::profile_csv(&profile),
                })
            }
            Command::Tables { number, format } => {
                reject_format(*format, &[Csv, Json])?;
                let table = tables::table(*number)
                    .ok_or_else(|| anyhow!("table number must be 1 through 8"))?;
                let mut store = self.open_store()?;
                let mut batch = self.batch(store.as_mut());
                let rows = class_census_in(&mut batch, table.primes, table.key())?;
                ok(match format {
                    Json => render::json(&render::RowsDocument::new(
                        Some(table.number),
                        table.lsd,
                        table.second_parity.as_str(),
                        LengthClass::Half.as_str(),
                        &rows,
                    )),
                    _ => render::rows_csv(&rows),
                })
            }
            Command::Figure { range, scope } => {
                let limit = range.limit();
                let format = range.format();
                let scope = match scope {
                    ScopeArg::All => CensusScope::AllPrimes,
                    ScopeArg::FullHalf => CensusScope::FullAndHalf,
                };
                let mut store = self.open_store()?;
                let mut batch = self.batch(store.as_mut());
                let hist = global_digit_census_in(&mut batch, limit, scope)?;
                ok(match format {
                    Csv => render::figure_csv(&hist),
                    Svg => render::figure_svg(&hist, limit),
                    Json => render::json(&render::FigureDocument {
                        limit,
                        scope: match scope {
                            CensusScope::AllPrimes => "all",
                            CensusScope::FullAndHalf => "full-half",
                        },
                        counts: *hist.counts(),
                        total: hist.total(),
                    }),
                })
            }
            Command::Census {
                range,
                lsd,
                parity,
                class,
            } => {
                let format = range.format();
                reject_format(format, &[Csv, Json])?;
                if ![1, 3, 7, 9].contains(lsd) {
                    bail!("--lsd must be one of 1, 3, 7, 9");
                }
                let key = ClassKey::new(
                    *lsd,
                    match parity {
                        ParityArg::Even => Parity::Even,
                        ParityArg::Odd => Parity::Odd,
                    },
                    match class {
                        ClassArg::Full => LengthClass::Full,
                        ClassArg::Half => LengthClass::Half,
                        ClassArg::Other => LengthClass::Other,
                    },
                );
                let mut store = self.open_store()?;
                let mut batch = self.batch(store.as_mut());
                let primes = primes_in_class(&mut batch, range.limit(), key)?;
                let rows = class_census_in(&mut batch, &primes, key)?;
                ok(match format {
                    Json => render::json(&render::RowsDocument::new(
                        None,
                        key.lsd,
                        key.second_parity.as_str(),
                        key.length_class.as_str(),
                        &rows,
                    )),
                    _ => render::rows_csv(&rows),
                })
            }
            Command::Verify { range } => {
                let format = range.format();
                reject_format(format, &[Csv, Json])?;
                let mut store = self.open_store()?;
                let mut batch = self.batch(store.as_mut());
                let summary = verify_range_in(&mut batch, range.limit())?;
                let stdout = match format {
                    Json => render::json(&summary),
                    _ => render::verify_csv(&summary),
                };
                let code = if summary.hard_failures() > 0 {
                    EXIT_HARD_FAILURE
                } else {
                    EXIT_OK
                };
                Ok(Outcome { stdout, code })
            }
            Command::ScanParity { range } => {
                let format = range.format();
                reject_format(format, &[Csv, Json])?;
                let batch = self.batch(None);
                let report = third_digit_parity_scan_in(&batch, range.limit());
                ok(match format {
                    Json => render::json(&render::ParityDocument::from(&report)),
                    _ => render::parity_csv(&report),
                })
            }
        }
    }

    fn batch<'s>(&self, store: Option<&'s mut Store>) -> Batch<'s> {
        let batch = Batch::new(self.jobs);
        match store {
            Some(store) => batch.with_store(store),
            None => batch,
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<dseq_core::Error>() {
        Some(dseq_core::Error::CacheCorruption { .. }) => EXIT_CACHE_CORRUPTION,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match cli.execute() {
        Ok(outcome) => {
            if let Err(e) = out
                .write_all(outcome.stdout.as_bytes())
                .and_then(|_| out.flush())
                .context("writing output")
            {
                let _ = writeln!(err, "error: {e:#}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code_for(&e)
        }
    }
}
