//! Node-count and wall-clock limits for exhaustive searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Search limits. Both must hold; whichever runs out first stops the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Budget {
    pub const DEFAULT: Budget = Budget { max_nodes: 10_000_000, max_millis: 5_000 };

    pub fn new(max_nodes: u64, max_millis: u64) -> Self {
        Budget { max_nodes, max_millis }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX, max_millis: u64::MAX }
    }

    pub fn scaled(self, factor: u64) -> Self {
        Budget {
            max_nodes: self.max_nodes.saturating_mul(factor),
            max_millis: self.max_millis.saturating_mul(factor),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted after {nodes} nodes / {millis} ms")]
pub struct BudgetExceeded {
    pub nodes: u64,
    pub millis: u64,
}

/// Shared meter for one search; safe to use from several workers.
#[derive(Debug)]
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    tripped: AtomicBool,
}

const FLUSH: u64 = 1024;

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter { budget, start: Instant::now(), nodes: AtomicU64::new(0), tripped: AtomicBool::new(false) }
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn is_tripped(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }

    pub fn exceeded(&self) -> BudgetExceeded {
        BudgetExceeded { nodes: self.nodes(), millis: self.elapsed().as_millis() as u64 }
    }

    fn add(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.budget.max_nodes
            || self.start.elapsed() > Duration::from_millis(self.budget.max_millis)
        {
            self.tripped.store(true, Ordering::Relaxed);
        }
        !self.is_tripped()
    }

    pub fn local(&self) -> LocalMeter<'_> {
        let every = (self.budget.max_nodes / 16).clamp(1, FLUSH);
        LocalMeter { meter: self, pending: 0, every }
    }
}

/// Per-worker counter that batches updates to the shared [`Meter`].
pub(crate) struct LocalMeter<'a> {
    meter: &'a Meter,
    pending: u64,
    every: u64,
}

impl LocalMeter<'_> {
    /// Counts one node; `false` once the budget is gone.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= self.every {
            let n = std::mem::take(&mut self.pending);
            return self.meter.add(n);
        }
        true
    }
}

impl Drop for LocalMeter<'_> {
    fn drop(&mut self) {
        if self.pending > 0 {
            self.meter.nodes.fetch_add(self.pending, Ordering::Relaxed);
        }
    }
}
