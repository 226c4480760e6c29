//! Append-only results cache.
//!
//! File layout: a header line `# dseq-cache v1`, then one record per line as
//! `p,l,period,k,c0,...,c9`. A final line without its newline is treated as
//! an interrupted write: it is dropped with a warning and the file is cut
//! back to the last complete record.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use log::warn;
use serde::{Deserialize, Serialize};

use crate::census::PrimeProfile;
use crate::dseq::DigitHistogram;
use crate::error::{Error, Result};
use crate::numtheory::is_prime;

pub const HEADER: &str = "# dseq-cache v1";
pub const DEFAULT_CACHE_FILE: &str = "dseq-cache.csv";

/// Period, cofactor and digit counts of one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheRecord {
    pub p: u64,
    pub l: u8,
    pub period: u64,
    pub cofactor: u64,
    pub counts: [u64; 10],
}

impl CacheRecord {
    pub fn new(profile: &PrimeProfile, hist: &DigitHistogram) -> Self {
        CacheRecord {
            p: profile.p,
            l: profile.l,
            period: profile.period,
            cofactor: profile.cofactor,
            counts: *hist.counts(),
        }
    }

    pub fn histogram(&self) -> DigitHistogram {
        DigitHistogram::from_counts(self.counts)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidRecord {
                p: self.p,
                reason,
            })
        };
        if !is_prime(self.p) || self.p == 2 || self.p == 5 {
            return fail("not an odd prime other than 5".into());
        }
        if self.l as u64 * self.p % 10 != 9 {
            return fail(format!("multiplier {} does not satisfy l*p = 9 mod 10", self.l));
        }
        if self.period == 0 || self.cofactor.checked_mul(self.period) != Some(self.p - 1) {
            return fail(format!(
                "cofactor {} * period {} != p - 1",
                self.cofactor, self.period
            ));
        }
        let sum: u64 = self.counts.iter().sum();
        if sum != self.period {
            return fail(format!("counts sum to {sum}, period is {}", self.period));
        }
        Ok(())
    }

    fn to_line(self) -> String {
        let mut line = format!("{},{},{},{}", self.p, self.l, self.period, self.cofactor);
        for c in self.counts {
            line.push(',');
            line.push_str(&c.to_string());
        }
        line
    }

    fn parse(line: &str) -> Option<Self> {
        let fields: Vec<u64> = line
            .split(',')
            .map(|f| f.trim().parse().ok())
            .collect::<Option<_>>()?;
        if fields.len() != 14 || fields[1] > 9 {
            return None;
        }
        let mut counts = [0u64; 10];
        counts.copy_from_slice(&fields[4..]);
        Some(CacheRecord {
            p: fields[0],
            l: fields[1] as u8,
            period: fields[2],
            cofactor: fields[3],
            counts,
        })
    }
}

/// Whether [`Store::append`] wrote a new line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ack {
    Written,
    AlreadyPresent,
}

/// Cache file plus its in-memory index. One writer per file.
#[derive(Debug)]
pub struct Store {
    path: PathBuf,
    records: BTreeMap<u64, CacheRecord>,
    writer: BufWriter<File>,
}

impl Store {
    /// Opens `path`, creating it if needed, and loads every complete record.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&path)?;
        let corrupt = |reason: String| Error::CacheCorruption {
            path: path.clone(),
            reason,
        };

        let mut contents = String::new();
        BufReader::new(&mut file).read_to_string(&mut contents)?;

        if !contents.is_empty() && !contents.ends_with('\n') {
            let keep = contents.rfind('\n').map_or(0, |i| i + 1);
            warn!(
                "{}: dropping truncated final line {:?}",
                path.display(),
                &contents[keep..]
            );
            contents.truncate(keep);
            file.set_len(keep as u64)?;
        }

        let mut records = BTreeMap::new();
        let mut lines = contents.lines().enumerate();
        match lines.next() {
            None => {}
            Some((_, HEADER)) => {}
            Some((_, other)) => return Err(corrupt(format!("unexpected header {other:?}"))),
        }
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let record = CacheRecord::parse(line)
                .ok_or_else(|| corrupt(format!("line {}: malformed record {line:?}", idx + 1)))?;
            record
                .validate()
                .map_err(|e| corrupt(format!("line {}: {e}", idx + 1)))?;
            match records.get(&record.p) {
                Some(existing) if *existing != record => {
                    return Err(corrupt(format!(
                        "line {}: conflicting records for {}",
                        idx + 1,
                        record.p
                    )))
                }
                _ => {
                    records.insert(record.p, record);
                }
            }
        }

        file.seek(SeekFrom::End(0))?;
        let mut writer = BufWriter::new(file);
        if contents.is_empty() {
            writeln!(writer, "{HEADER}")?;
            writer.flush()?;
        }
        Ok(Store {
            path,
            records,
            writer,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn lookup(&self, p: u64) -> Option<&CacheRecord> {
        self.records.get(&p)
    }

    /// Appends `record` and flushes it to disk. Idempotent for identical
    /// records; a differing record for a cached prime is corruption.
    pub fn append(&mut self, record: CacheRecord) -> Result<Ack> {
        let ack = self.append_buffered(record)?;
        self.writer.flush()?;
        Ok(ack)
    }

    /// Appends many records with a single flush at the end.
    pub fn append_all(&mut self, records: impl IntoIterator<Item = CacheRecord>) -> Result<usize> {
        let mut written = 0;
        for r in records {
            if self.append_buffered(r)? == Ack::Written {
                written += 1;
            }
        }
        self.writer.flush()?;
        Ok(written)
    }

    fn append_buffered(&mut self, record: CacheRecord) -> Result<Ack> {
        record.validate()?;
        if let Some(existing) = self.records.get(&record.p) {
            return if *existing == record {
                Ok(Ack::AlreadyPresent)
            } else {
                Err(Error::CacheCorruption {
                    path: self.path.clone(),
                    reason: format!(
                        "record for {} disagrees with cached {:?}",
                        record.p, existing
                    ),
                })
            };
        }
        writeln!(self.writer, "{}", record.to_line())?;
        self.records.insert(record.p, record);
        Ok(Ack::Written)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record_601() -> CacheRecord {
        CacheRecord {
            p: 601,
            l: 9,
            period: 300,
            cofactor: 2,
            counts: [35, 28, 28, 31, 28, 28, 31, 28, 28, 35],
        }
    }

    #[test]
    fn append_and_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.csv");
        let mut store = Store::open(&path).unwrap();
        assert!(store.lookup(7).is_none());
        assert_eq!(store.append(record_601()).unwrap(), Ack::Written);
        assert_eq!(store.lookup(601), Some(&record_601()));
        assert!(store.lookup(602).is_none());
    }

    #[test]
    fn append_is_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.csv");
        let mut store = Store::open(&path).unwrap();
        store.append(record_601()).unwrap();
        assert_eq!(store.append(record_601()).unwrap(), Ack::AlreadyPresent);
        drop(store);
        let contents = std::fs::read_to_string(&path).unwrap();
        assert_eq!(contents, format!("{HEADER}\n{}\n", record_601().to_line()));
        assert_eq!(Store::open(&path).unwrap().len(), 1);
    }

    #[test]
    fn rejects_bad_sum() {
        let dir = tempfile::tempdir().unwrap();
        let mut store = Store::open(dir.path().join("c.csv")).unwrap();
        let mut r = record_601();
        r.counts[0] -= 1;
        assert!(matches!(store.append(r), Err(Error::InvalidRecord { p: 601, .. })));
        assert!(store.is_empty());
    }

    #[test]
    fn conflicting_record_is_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let mut store = Store::open(dir.path().join("c.csv")).unwrap();
        store.append(record_601()).unwrap();
        let mut r = record_601();
        r.counts[0] -= 1;
        r.counts[1] += 1;
        assert!(matches!(store.append(r), Err(Error::CacheCorruption { .. })));
    }

    #[test]
    fn truncated_final_line_is_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(
            &path,
            format!("{HEADER}\n{}\n7,7,6,1,0,1", record_601().to_line()),
        )
        .unwrap();
        let mut store = Store::open(&path).unwrap();
        assert_eq!(store.len(), 1);
        assert!(store.lookup(7).is_none());
        let seven = CacheRecord {
            p: 7,
            l: 7,
            period: 6,
            cofactor: 1,
            counts: [0, 1, 1, 0, 1, 1, 0, 1, 1, 0],
        };
        store.append(seven).unwrap();
        drop(store);
        let reopened = Store::open(&path).unwrap();
        assert_eq!(reopened.lookup(7), Some(&seven));
        assert_eq!(reopened.len(), 2);
    }

    #[test]
    fn malformed_middle_line_is_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(&path, format!("{HEADER}\ngarbage\n{}\n", record_601().to_line())).unwrap();
        assert!(matches!(Store::open(&path), Err(Error::CacheCorruption { .. })));
    }

    #[test]
    fn wrong_header_is_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(&path, "prime,count\n").unwrap();
        assert!(matches!(Store::open(&path), Err(Error::CacheCorruption { .. })));
    }
}
