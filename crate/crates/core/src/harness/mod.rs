//! Reproducible experiment suites and report persistence.

mod corpus;
mod suites;

pub use corpus::{bounded_degree_tree, friendship, path_cycle_forest, path_forest, relabel_randomly};
pub use suites::{chromatic_number, SUITES};

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

use crate::error::{input, Result};
use crate::graph::Graph;
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The exhaustive search ran out of budget before deciding.
    Indeterminate,
}

/// One checked statement with its measured value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    /// Which statement of the source material the claim exercises.
    pub paper_ref: String,
    pub expected: String,
    pub observed: Value,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 2024, limits: Limits::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub config: SuiteConfig,
    /// Sorted by id.
    pub claims: Vec<Claim>,
}

impl SuiteReport {
    /// No claim failed. Indeterminate claims do not count as failures.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    /// The claims array as JSON, for reproducibility comparisons.
    pub fn claims_json(&self) -> String {
        serde_json::to_string(&self.claims).expect("claims serialize")
    }
}

/// Runs a named suite. Unknown names are an input error listing the valid
/// ones.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let Some(&(_, run)) = SUITES.iter().find(|(n, _)| *n == name) else {
        let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        return input(format!("unknown suite {name:?}; expected one of {}", names.join(", ")));
    };
    let mut claims = run(config);
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Ok(SuiteReport { suite: name.to_string(), timestamp, config: config.clone(), claims })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Self::EdgeList),
            "dot" => Ok(Self::Dot),
            other => input(format!("unknown graph format {other:?}; expected edgelist or dot")),
        }
    }
}

pub fn export(g: &Graph, format: ExportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ExportFormat::EdgeList => g.to_edge_list(),
        ExportFormat::Dot => g.to_dot(),
    };
    std::fs::write(path, text)?;
    Ok(())
}

/// Pretty-printed JSON; field order is fixed by the struct definitions.
pub fn report_store(report: &SuiteReport, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
