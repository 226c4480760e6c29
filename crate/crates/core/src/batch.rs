//! Per-prime parallel evaluation with ordered results.
//!
//! Work fans out over a dedicated rayon pool; results come back in input
//! order so every reduction downstream runs in the same sequence whatever the
//! worker count. Cache writes go through the single `&mut Store` held here.

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::census::classify;
use crate::dseq::histogram;
use crate::error::Result;
use crate::store::{CacheRecord, Store};

/// Computes the cache record for `p` from scratch.
pub fn compute_record(p: u64) -> Result<CacheRecord> {
    let profile = classify(p)?;
    let hist = histogram(&profile.spec());
    Ok(CacheRecord::new(&profile, &hist))
}

pub struct Batch<'s> {
    pool: ThreadPool,
    jobs: usize,
    store: Option<&'s mut Store>,
}

impl Default for Batch<'_> {
    fn default() -> Self {
        Batch::new(0)
    }
}

impl<'s> Batch<'s> {
    /// `jobs == 0` uses one worker per available core.
    pub fn new(jobs: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build worker pool");
        let jobs = pool.current_num_threads();
        Batch {
            pool,
            jobs,
            store: None,
        }
    }

    pub fn with_store(mut self, store: &'s mut Store) -> Self {
        self.store = Some(store);
        self
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    /// Ordered parallel map over `items`.
    pub fn map<T, F>(&self, items: &[u64], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        self.pool
            .install(|| items.par_iter().map(|&x| f(x)).collect())
    }

    /// Ordered parallel map that stops at the first error in input order.
    pub fn try_map<T, F>(&self, items: &[u64], f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(u64) -> Result<T> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }

    /// Records for `primes` in input order, served from the cache where
    /// possible. Newly computed records are appended to the cache afterwards.
    pub fn records(&mut self, primes: &[u64]) -> Result<Vec<CacheRecord>> {
        let Some(store) = self.store.as_deref_mut() else {
            return self.try_map(primes, compute_record);
        };

        let missing: Vec<u64> = primes
            .iter()
            .copied()
            .filter(|&p| store.lookup(p).is_none())
            .collect();
        let fresh = self
            .pool
            .install(|| -> Result<Vec<CacheRecord>> {
                missing.par_iter().map(|&p| compute_record(p)).collect()
            })?;
        store.append_all(fresh)?;

        Ok(primes
            .iter()
            .map(|p| *store.lookup(*p).expect("record was just cached"))
            .collect())
    }
}
