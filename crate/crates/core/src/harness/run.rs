//! Corpora and the batched runner. Graphs are produced and checked in
//! parallel, then folded in corpus order, so results do not depend on the
//! thread count.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::check::{Check, Compiled, Outcome};
use super::report::{AssertionReport, CorpusMode, CorpusSummary, RunReport, Status, Violation, MAX_STORED_VIOLATIONS};
use super::HarnessError;
use crate::families::{attempt_rng, labeled_graph, pair_count, Predicate, RandomModel};
use crate::graph::Graph;

const BATCH: u64 = 2048;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "corpus", rename_all = "kebab-case")]
pub enum Corpus {
    /// Every labeled graph with `n_min..=n_max` vertices passing `filter`.
    Exhaustive {
        n_min: usize,
        n_max: usize,
        filter: String,
    },
    /// Draws from `model` until `target` graphs pass `filter` or `budget`
    /// draws are spent.
    Sampled {
        model: RandomModel,
        seed: u64,
        filter: String,
        target: u64,
        budget: u64,
    },
    Explicit {
        label: String,
        graphs: Vec<(String, String)>,
    },
}

impl Corpus {
    pub fn explicit(label: impl Into<String>, graphs: impl IntoIterator<Item = (String, Graph)>) -> Corpus {
        Corpus::Explicit {
            label: label.into(),
            graphs: graphs.into_iter().map(|(name, g)| (name, g.to_graph6())).collect(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Corpus::Exhaustive { n_min, n_max, filter } => {
                format!("all labeled graphs, {n_min} <= n <= {n_max}, filter [{}]", show(filter))
            }
            Corpus::Sampled { model, filter, target, budget, .. } => format!(
                "{} accepted of at most {budget} draws from {}, filter [{}]",
                target,
                describe_model(model),
                show(filter)
            ),
            Corpus::Explicit { label, graphs } => format!("{label} ({} graphs)", graphs.len()),
        }
    }

    fn mode(&self) -> CorpusMode {
        match self {
            Corpus::Exhaustive { .. } => CorpusMode::Exhaustive,
            Corpus::Sampled { .. } => CorpusMode::Sampled,
            Corpus::Explicit { .. } => CorpusMode::Explicit,
        }
    }
}

fn show(filter: &str) -> &str {
    if filter.trim().is_empty() {
        "any"
    } else {
        filter
    }
}

fn describe_model(m: &RandomModel) -> String {
    match m {
        RandomModel::Gnp { n, p } => format!("G(n,p), n in {}..={}, p in {:.2}..={:.2}", n.0, n.1, p.0, p.1),
        RandomModel::LineGraph { root, p, n } => format!(
            "line graphs of G(m,p), m in {}..={}, p in {:.2}..={:.2}, order {}..={}",
            root.0, root.1, p.0, p.1, n.0, n.1
        ),
        RandomModel::ClawFreeGrowth { n, keep } => {
            format!("claw-free edge growth, n in {}..={}, keep {:.2}..={:.2}", n.0, n.1, keep.0, keep.1)
        }
    }
}

/// One assertion of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub check: Check,
    pub fatal: bool,
    pub floor: u64,
}

impl Assertion {
    pub fn new(check: Check) -> Assertion {
        Assertion { check, fatal: true, floor: 0 }
    }

    pub fn report_only(check: Check) -> Assertion {
        Assertion { check, fatal: false, floor: 0 }
    }

    pub fn with_floor(mut self, floor: u64) -> Assertion {
        self.floor = floor;
        self
    }
}

struct Tally {
    instances: u64,
    vacuous: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

/// Outcomes of one corpus item: `None` when the filter rejected it.
type Item = Option<(Graph, Vec<Outcome>)>;

fn evaluate_all(g: Graph, filter: &Predicate, compiled: &[Compiled]) -> Item {
    if !filter.eval(&g) {
        return None;
    }
    let outcomes = compiled.iter().map(|c| c.evaluate(&g)).collect();
    Some((g, outcomes))
}

pub fn run(corpus: &Corpus, assertions: &[Assertion]) -> Result<RunReport, HarnessError> {
    run_keeping(corpus, assertions, MAX_STORED_VIOLATIONS)
}

/// [`run`], storing up to `keep` violations per assertion.
pub(crate) fn run_keeping(corpus: &Corpus, assertions: &[Assertion], keep: usize) -> Result<RunReport, HarnessError> {
    let start = Instant::now();
    let compiled: Vec<Compiled> = assertions.iter().map(|a| a.check.compile()).collect::<Result<_, _>>()?;
    let mut tallies: Vec<Tally> = assertions
        .iter()
        .map(|_| Tally { instances: 0, vacuous: 0, violation_count: 0, violations: Vec::new() })
        .collect();
    let mut attempts = 0u64;
    let mut accepted = 0u64;
    let fold = |index: u64, item: Item, tallies: &mut [Tally], accepted: &mut u64| {
        let Some((g, outcomes)) = item else { return };
        *accepted += 1;
        for (t, o) in tallies.iter_mut().zip(outcomes) {
            match o {
                Outcome::Vacuous => t.vacuous += 1,
                Outcome::Held => t.instances += 1,
                Outcome::Violated(detail) => {
                    t.instances += 1;
                    t.violation_count += 1;
                    if t.violations.len() < keep {
                        t.violations.push(Violation { graph6: g.to_graph6(), detail, index });
                    }
                }
            }
        }
    };

    let seed = match corpus {
        Corpus::Exhaustive { n_min, n_max, filter } => {
            if *n_max > 7 {
                return Err(HarnessError::BadConfig(format!("exhaustive corpora stop at n = 7, got {n_max}")));
            }
            let filter: Predicate = filter.parse()?;
            let mut index = 0u64;
            for n in *n_min..=*n_max {
                let total = 1u64 << pair_count(n);
                let mut lo = 0;
                while lo < total {
                    let hi = (lo + BATCH * 8).min(total);
                    let items: Vec<Item> = (lo..hi)
                        .into_par_iter()
                        .map(|bits| evaluate_all(labeled_graph(n, bits), &filter, &compiled))
                        .collect();
                    for item in items {
                        fold(index, item, &mut tallies, &mut accepted);
                        index += 1;
                    }
                    lo = hi;
                }
                attempts += total;
            }
            None
        }
        Corpus::Sampled { model, seed, filter, target, budget } => {
            let filter: Predicate = filter.parse()?;
            let mut lo = 0u64;
            'outer: while lo < *budget && accepted < *target {
                let hi = (lo + BATCH).min(*budget);
                let items: Vec<Item> = (lo..hi)
                    .into_par_iter()
                    .map(|i| evaluate_all(model.sample(&mut attempt_rng(*seed, i)), &filter, &compiled))
                    .collect();
                for (i, item) in (lo..hi).zip(items) {
                    attempts = i + 1;
                    fold(i, item, &mut tallies, &mut accepted);
                    if accepted >= *target {
                        break 'outer;
                    }
                }
                lo = hi;
            }
            Some(*seed)
        }
        Corpus::Explicit { graphs, .. } => {
            let parsed: Vec<Graph> =
                graphs.iter().map(|(_, text)| Graph::from_graph6(text)).collect::<Result<_, _>>()?;
            let any = Predicate::any();
            let items: Vec<Item> = parsed.into_par_iter().map(|g| evaluate_all(g, &any, &compiled)).collect();
            for (i, item) in items.into_iter().enumerate() {
                attempts += 1;
                fold(i as u64, item, &mut tallies, &mut accepted);
            }
            None
        }
    };

    let sampled = corpus.mode() == CorpusMode::Sampled;
    let assertions = assertions
        .iter()
        .zip(tallies)
        .map(|(a, t)| {
            let status = if t.violation_count > 0 {
                Status::Failed
            } else if sampled && t.instances < a.floor {
                Status::Inconclusive
            } else {
                Status::Passed
            };
            AssertionReport {
                name: a.check.to_string(),
                check: a.check.clone(),
                fatal: a.fatal,
                floor: a.floor,
                instances: t.instances,
                vacuous: t.vacuous,
                violation_count: t.violation_count,
                violations: t.violations,
                status,
            }
        })
        .collect();
    Ok(RunReport {
        corpus: CorpusSummary { description: corpus.describe(), mode: corpus.mode(), seed, attempts, accepted },
        assertions,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_every_graph() {
        let corpus = Corpus::Exhaustive { n_min: 0, n_max: 4, filter: String::new() };
        let r = run(&corpus, &[Assertion::new(Check::Oracles)]).unwrap();
        assert_eq!(r.corpus.attempts, 1 + 1 + 2 + 8 + 64);
        assert_eq!(r.corpus.accepted, r.corpus.attempts);
        assert_eq!(r.assertions[0].instances, 76);
        assert_eq!(r.status(), Status::Passed);
    }

    #[test]
    fn sampled_runs_are_reproducible_and_stop_at_target() {
        let corpus = Corpus::Sampled {
            model: RandomModel::Gnp { n: (5, 8), p: (0.3, 0.7) },
            seed: 9,
            filter: "claw-o-heavy".into(),
            target: 40,
            budget: 10_000,
        };
        let a = [Assertion::new(Check::CClosure { policies: 3 }).with_floor(100)];
        let r1 = run(&corpus, &a).unwrap();
        let r2 = run(&corpus, &a).unwrap();
        assert_eq!(r1.corpus.accepted, 40);
        assert_eq!(r1.corpus.attempts, r2.corpus.attempts);
        assert_eq!(r1.assertions, r2.assertions);
        // 40 instances is under the floor
        assert_eq!(r1.status(), Status::Inconclusive);
    }

    #[test]
    fn violations_are_recorded_and_recheck() {
        let corpus =
            Corpus::explicit("two graphs", [("C5".into(), Graph::cycle(5)), ("K4".into(), Graph::complete(4))]);
        let check = Check::implication("any", "claw-free & Z1-free");
        let r = run(&corpus, &[Assertion::new(check.clone())]).unwrap();
        let a = &r.assertions[0];
        assert_eq!(a.violation_count, 0);
        let check = Check::implication("any", "K4-free");
        let r = run(&corpus, &[Assertion::new(check.clone())]).unwrap();
        let a = &r.assertions[0];
        assert_eq!(a.violation_count, 1);
        assert_eq!(a.violations[0].index, 1);
        assert!(a.violations[0].recheck(&check).unwrap());
        assert_eq!(r.status(), Status::Failed);
    }

    #[test]
    fn report_only_assertions_do_not_fail_runs() {
        let corpus = Corpus::explicit("one", [("K4".into(), Graph::complete(4))]);
        let r = run(&corpus, &[Assertion::report_only(Check::implication("any", "K4-free"))]).unwrap();
        assert_eq!(r.assertions[0].status, Status::Failed);
        assert_eq!(r.status(), Status::Passed);
    }

    #[test]
    fn exhaustive_bound_is_enforced() {
        let corpus = Corpus::Exhaustive { n_min: 8, n_max: 8, filter: String::new() };
        assert!(run(&corpus, &[]).is_err());
    }
}
