use serde::{Deserialize, Serialize};

use super::check::{Check, Outcome};
use super::HarnessError;
use crate::graph::Graph;

/// Sampled assertions with fewer instances than this are inconclusive.
pub const INCONCLUSIVE_FLOOR: u64 = 100;

/// Violations stored per assertion; the total is always counted.
pub const MAX_STORED_VIOLATIONS: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Inconclusive,
    Failed,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Passed => "pass",
            Status::Inconclusive => "inconclusive",
            Status::Failed => "FAIL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    Exhaustive,
    Sampled,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub description: String,
    pub mode: CorpusMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Graphs generated, including those rejected by the filter.
    pub attempts: u64,
    /// Graphs that passed the filter and were checked.
    pub accepted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
    /// Position in the corpus stream.
    pub index: u64,
}

impl Violation {
    /// Re-parses the witness and evaluates `check` on it again.
    pub fn recheck(&self, check: &Check) -> Result<bool, HarnessError> {
        let g = Graph::from_graph6(&self.graph6)?;
        Ok(matches!(check.compile()?.evaluate(&g), Outcome::Violated(_)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssertionReport {
    pub name: String,
    pub check: Check,
    /// Report-only assertions never fail a run.
    pub fatal: bool,
    /// Minimum instances before a sampled assertion counts as passed.
    pub floor: u64,
    pub instances: u64,
    pub vacuous: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub corpus: CorpusSummary,
    pub assertions: Vec<AssertionReport>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn status(&self) -> Status {
        self.assertions.iter().filter(|a| a.fatal).map(|a| a.status).max().unwrap_or(Status::Passed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub runs: Vec<RunReport>,
    pub status: Status,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, runs: Vec<RunReport>) -> VerificationReport {
        let status = runs.iter().map(RunReport::status).max().unwrap_or(Status::Passed);
        let wall_time_ms = runs.iter().map(|r| r.wall_time_ms).sum();
        VerificationReport { suite: suite.into(), runs, status, wall_time_ms }
    }

    pub fn assertions(&self) -> impl Iterator<Item = &AssertionReport> {
        self.runs.iter().flat_map(|r| &r.assertions)
    }

    pub fn violation_count(&self, fatal_only: bool) -> u64 {
        self.assertions().filter(|a| a.fatal || !fatal_only).map(|a| a.violation_count).sum()
    }

    pub fn instances(&self) -> u64 {
        self.assertions().map(|a| a.instances).sum()
    }

    /// Pretty-printed JSON, the canonical report format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain data")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One line per assertion, for terminals and logs.
    pub fn summary(&self) -> String {
        let mut out = format!("{} [{}] {} ms\n", self.suite, self.status, self.wall_time_ms);
        for run in &self.runs {
            out.push_str(&format!(
                "  {} ({:?}, {} accepted / {} generated)\n",
                run.corpus.description, run.corpus.mode, run.corpus.accepted, run.corpus.attempts
            ));
            for a in &run.assertions {
                out.push_str(&format!(
                    "    [{}]{} {}: {} instances, {} vacuous, {} violations\n",
                    a.status,
                    if a.fatal { "" } else { " (report-only)" },
                    a.name,
                    a.instances,
                    a.vacuous,
                    a.violation_count
                ));
            }
        }
        out
    }

    /// Re-runs every stored violation; returns those that no longer fail.
    pub fn stale_violations(&self) -> Result<Vec<(String, Violation)>, HarnessError> {
        let mut out = Vec::new();
        for a in self.assertions() {
            for v in &a.violations {
                if !v.recheck(&a.check)? {
                    out.push((a.name.clone(), v.clone()));
                }
            }
        }
        Ok(out)
    }
}
