//! Counterexample search. A target names a property; the hunter checks a
//! handful of seed graphs and then spends its budget on random draws that
//! satisfy the property's hypotheses, returning every violation it sees.

use serde::{Deserialize, Serialize};

use super::check::Check;
use super::report::{RunReport, Violation};
use super::run::{run_keeping, Assertion, Corpus};
use super::suites::{obstruction_corpus, MAIN_MODEL, STABILITY_MODEL, WITNESSES};
use super::HarnessError;
use crate::families::{FamilySpec, RandomModel};
use crate::graph::Graph;

/// A property to falsify.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntTarget {
    pub name: String,
    pub check: Check,
    /// Draws from `model` are kept when they pass `filter`.
    pub filter: String,
    pub model: RandomModel,
    pub seeds: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntReport {
    pub target: HuntTarget,
    pub seed: u64,
    pub budget: u64,
    pub seeded: RunReport,
    pub sampled: RunReport,
    pub witnesses: Vec<Violation>,
}

/// Target name patterns, for help texts.
pub const TARGET_FORMS: &[&str] =
    &["closure-preserves-<S>-<condition>", "closure-no-heavy-pair", "<S>-<condition>-implies-hamiltonian"];

fn witness_seeds() -> Result<Vec<(String, String)>, HarnessError> {
    WITNESSES
        .iter()
        .map(|&(family, params)| {
            let g = FamilySpec::parse(family, params)?.build_unchecked()?.graph;
            Ok((format!("{family}({params})"), g.to_graph6()))
        })
        .collect()
}

fn graph6_seeds(graphs: Vec<(String, Graph)>) -> Vec<(String, String)> {
    graphs.into_iter().map(|(name, g)| (name, g.to_graph6())).collect()
}

pub fn target(name: &str) -> Result<HuntTarget, HarnessError> {
    let unknown = || HarnessError::UnknownTarget(name.to_string());
    let make = |check: Check, filter: String, model: RandomModel, seeds: Vec<(String, String)>| HuntTarget {
        name: name.to_string(),
        check,
        filter,
        model,
        seeds,
    };
    if name == "closure-no-heavy-pair" {
        let check = Check::ClosureSatisfies { premise: "claw-o-heavy".into(), conclusion: "no-heavy-pair".into() };
        return Ok(make(check, "claw-o-heavy".into(), STABILITY_MODEL, witness_seeds()?));
    }
    if let Some(condition) = name.strip_prefix("closure-preserves-") {
        let premise = format!("claw-o-heavy & {condition}");
        check_predicate(&premise).map_err(|_| unknown())?;
        let check = Check::ClosureSatisfies { premise: premise.clone(), conclusion: condition.into() };
        return Ok(make(check, premise, STABILITY_MODEL, witness_seeds()?));
    }
    if let Some(condition) = name.strip_suffix("-implies-hamiltonian") {
        let premise = format!("2-connected & claw-o-heavy & {condition}");
        check_predicate(&premise).map_err(|_| unknown())?;
        let check = Check::Hamiltonian { premise: premise.clone(), exceptions: vec![] };
        return Ok(make(check, premise, MAIN_MODEL, graph6_seeds(obstruction_corpus(14)?)));
    }
    Err(unknown())
}

fn check_predicate(s: &str) -> Result<(), HarnessError> {
    s.parse::<crate::families::Predicate>()?;
    Ok(())
}

/// Checks the seeds, then draws `budget` random graphs.
pub fn hunt(target: &HuntTarget, budget: u64, seed: u64) -> Result<HuntReport, HarnessError> {
    if budget == 0 {
        return Err(HarnessError::BadConfig("hunt budget must be at least 1".into()));
    }
    let assertions = [Assertion::new(target.check.clone())];
    let seeds = Corpus::Explicit { label: format!("{} seeds", target.name), graphs: target.seeds.clone() };
    let seeded = run_keeping(&seeds, &assertions, usize::MAX)?;
    let sampled =
        Corpus::Sampled { model: target.model, seed, filter: target.filter.clone(), target: u64::MAX, budget };
    let sampled = run_keeping(&sampled, &assertions, usize::MAX)?;
    let witnesses = seeded.assertions[0].violations.iter().chain(&sampled.assertions[0].violations).cloned().collect();
    Ok(HuntReport { target: target.clone(), seed, budget, seeded, sampled, witnesses })
}
