//! Machine-readable verification report: named check outcomes with
//! witness data, aggregated with stable ordering so that identical
//! inputs serialize to identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Outcome of one named check, with the computed witness data that
/// justifies the verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    /// The mathematical statement the check verifies.
    pub claim: String,
    pub computed: serde_json::Value,
    /// Milliseconds; zeroed in deterministic mode.
    pub elapsed: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass_count: usize,
    pub fail_count: usize,
    pub skip_count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    /// Resolved configuration, as a sorted key-value map.
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    /// Milliseconds; zeroed in deterministic mode.
    pub elapsed_total: u64,
}

impl Report {
    pub fn new(
        command: &str,
        config: BTreeMap<String, String>,
        mut checks: Vec<CheckResult>,
        elapsed_total: u64,
    ) -> Report {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let summary = Summary {
            pass_count: checks.iter().filter(|c| c.status == Status::Pass).count(),
            fail_count: checks.iter().filter(|c| c.status == Status::Fail).count(),
            skip_count: checks.iter().filter(|c| c.status == Status::Skip).count(),
        };
        Report {
            version: "1".to_string(),
            command: command.to_string(),
            config,
            checks,
            summary,
            elapsed_total,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
