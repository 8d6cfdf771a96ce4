//! Declarative verification: checks, corpora, suites and reports.

mod check;
mod hunt;
mod manifest;
mod report;
mod run;
mod suites;

use thiserror::Error;

use crate::families::{FamilyError, PredicateError};
use crate::graph::GraphError;
use crate::pattern::PatternError;

pub use check::{Check, Compiled, Outcome, NAIVE_ORACLE_ORDER, POLICY_SEEDS, STEP_CIRCUMFERENCE_ORDER};
pub use hunt::{hunt, target, HuntReport, HuntTarget, TARGET_FORMS};
pub use manifest::{manifest, ManifestEntry};
pub use report::{
    AssertionReport, CorpusMode, CorpusSummary, RunReport, Status, VerificationReport, Violation, INCONCLUSIVE_FLOOR,
    MAX_STORED_VIOLATIONS,
};
pub use run::{run, Assertion, Corpus};
pub use suites::{
    arrow_checks, closure_check, forbidden_pair_checks, main_premise, obstruction_corpus, plans, stability_items,
    step_check, verify, witness_graphs, Plan, SuiteConfig, ARROW_MODEL, CLOSURE_MODEL, GROWTH_MODEL, LINE_MODEL,
    MAIN_MODEL, MAIN_PATTERNS, NET_P_HEAVY_PREMISE, STABILITY_MODEL, SUITES, WITNESSES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown hunt target {0:?}")]
    UnknownTarget(String),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}
