//! Budgets for the exhaustive searches.
//!
//! Every brute-force routine takes a [`Limits`] and stops with an explicit
//! budget error or an indeterminate answer instead of running unbounded.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Limits {
    /// Search nodes for minor, subgraph and strong-model searches (per call).
    pub search_nodes: u64,
    /// Search nodes for the optimal colouring oracles (per call).
    pub oracle_nodes: u64,
    pub treewidth_vertices: usize,
    pub treedepth_vertices: usize,
    pub oracle_vertices: usize,
    /// Isomorphism deduplication in family enumeration only below this size.
    pub dedup_vertices: usize,
    /// Largest graph a recursive generator may emit.
    pub generator_vertices: usize,
    #[serde(skip)]
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            search_nodes: 20_000_000,
            oracle_nodes: 50_000_000,
            treewidth_vertices: 14,
            treedepth_vertices: 20,
            oracle_vertices: 22,
            dedup_vertices: 12,
            generator_vertices: 5_000,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn search_meter(&self) -> Meter {
        Meter::new(self.search_nodes, self.deadline)
    }

    pub(crate) fn oracle_meter(&self) -> Meter {
        Meter::new(self.oracle_nodes, self.deadline)
    }
}

/// Node counter shared by one search.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    pub(crate) fn new(limit: u64, deadline: Option<Instant>) -> Self {
        Self { used: 0, limit, deadline, exhausted: false }
    }

    /// Counts one node; returns false once the budget is gone.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.used += 1;
        if self.used > self.limit {
            self.exhausted = true;
        } else if self.used & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }
}
