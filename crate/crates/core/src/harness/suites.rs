//! Named verification suites. Each suite is a list of [`Plan`]s, a corpus
//! with the assertions checked on it, so that suites can be inspected
//! without running them.

use serde::{Deserialize, Serialize};

use super::check::Check;
use super::report::{VerificationReport, INCONCLUSIVE_FLOOR};
use super::run::{run, Assertion, Corpus};
use super::HarnessError;
use crate::families::{gen_p_family, l1, l2, p_family_grid, petersen, FamilySpec, RandomModel};
use crate::graph::Graph;
use crate::heavy::{Transcription, C_HEAVY_ARROWS, F_HEAVY_ARROWS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Largest order of the exhaustive corpora (at most 7).
    pub n_max: usize,
    /// Accepted samples per sampled corpus.
    pub samples: u64,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_max: 6, samples: 1000, seed: 1 }
    }
}

impl SuiteConfig {
    fn budget(&self) -> u64 {
        self.samples.saturating_mul(400).max(10_000)
    }

    /// Distinct seed per sampled corpus of a suite.
    fn seed_for(&self, slot: u64) -> u64 {
        self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(slot)
    }

    fn sampled(&self, slot: u64, model: RandomModel, filter: impl Into<String>) -> Corpus {
        Corpus::Sampled {
            model,
            seed: self.seed_for(slot),
            filter: filter.into(),
            target: self.samples,
            budget: self.budget(),
        }
    }

    fn exhaustive(&self, n_max: usize, filter: impl Into<String>) -> Corpus {
        Corpus::Exhaustive { n_min: 0, n_max: n_max.min(self.n_max), filter: filter.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Plan {
    pub corpus: Corpus,
    pub assertions: Vec<Assertion>,
}

fn plan(corpus: Corpus, assertions: Vec<Assertion>) -> Plan {
    Plan { corpus, assertions }
}

pub const CLOSURE_MODEL: RandomModel = RandomModel::Gnp { n: (8, 13), p: (0.25, 0.75) };
pub const STABILITY_MODEL: RandomModel = RandomModel::Gnp { n: (7, 13), p: (0.3, 0.75) };
pub const MAIN_MODEL: RandomModel = RandomModel::Gnp { n: (10, 14), p: (0.35, 0.75) };
pub const ARROW_MODEL: RandomModel = RandomModel::Gnp { n: (4, 12), p: (0.1, 0.9) };
pub const GROWTH_MODEL: RandomModel = RandomModel::ClawFreeGrowth { n: (9, 13), keep: (0.25, 0.8) };
pub const LINE_MODEL: RandomModel = RandomModel::LineGraph { root: (6, 10), p: (0.25, 0.6), n: (9, 13) };

/// Suite names with one-line descriptions.
pub const SUITES: &[(&str, &str)] = &[
    ("closure-basics", "r- and c-closure batteries on exhaustive and sampled claw-o-heavy graphs"),
    ("regions", "region nonseparability, frontier/interior adjacency and interior paths"),
    ("minimal-supergraph", "r-closure is a least K112-free supergraph of a claw-free graph"),
    ("stability", "conditions preserved along c-closure sequences and by the c-closure"),
    ("witnesses", "claw-o-heavy constructions whose c-closure loses a c-heavy condition"),
    ("main-theorem", "claw-o-heavy plus S-c-heavy (and net p-heavy) 2-connected graphs are hamiltonian"),
    ("forbidden-pairs", "claw-free pairs with N, P6, W and Z3"),
    ("obstructions", "non-hamiltonian 2-connected claw-free graphs contain a two-triangle obstruction"),
    ("arrows", "implication diagrams between f-heavy and c-heavy conditions"),
    ("conditions", "relations between the heavy conditions and classical degree conditions"),
    ("oracles", "subset DP cycle oracles against naive search"),
];

/// Patterns of the main hamiltonicity result.
pub const MAIN_PATTERNS: [&str; 9] = ["P4", "P5", "P6", "Z1", "Z2", "Z3", "B", "N", "W"];

pub fn main_premise(pattern: &str) -> String {
    format!("2-connected & claw-o-heavy & {pattern}-c-heavy & n>=10")
}

pub const NET_P_HEAVY_PREMISE: &str = "2-connected & claw-o-heavy & N-p-heavy";

pub fn forbidden_pair_checks() -> Vec<Check> {
    let clause = |s: &str, exceptions: Vec<String>| Check::Hamiltonian {
        premise: format!("2-connected & claw-free & {s}-free"),
        exceptions,
    };
    vec![clause("N", vec![]), clause("P6", vec![]), clause("W", vec![]), clause("Z3", vec!["L1".into(), "L2".into()])]
}

/// (check, is the arrow as drawn) for both diagrams.
pub fn arrow_checks() -> Vec<(Check, bool)> {
    F_HEAVY_ARROWS
        .iter()
        .chain(C_HEAVY_ARROWS)
        .map(|a| {
            let check = Check::implication(format!("{}-{}", a.from, a.condition), format!("{}-{}", a.to, a.condition));
            (check, a.transcription == Transcription::Drawn)
        })
        .collect()
}

pub fn step_check(condition: &str) -> Check {
    Check::StepPreserves { premise: condition.into(), condition: condition.into() }
}

pub fn closure_check(premise: &str, conclusion: &str) -> Check {
    Check::ClosureSatisfies { premise: premise.into(), conclusion: conclusion.into() }
}

/// Stability items: (filter, assertions).
pub fn stability_items() -> Vec<(String, Vec<Check>)> {
    let mut items = Vec::new();
    for i in 4..=6 {
        let cond = format!("P{i}-c-heavy");
        let mut checks = vec![step_check(&cond)];
        if i >= 5 {
            checks.push(closure_check(&cond, &format!("P{i}-free")));
        }
        items.push((cond, checks));
    }
    items.push(("Z1-c-heavy".into(), vec![closure_check("Z1-c-heavy", "Z1-c-heavy")]));
    items.push(("Z3-c-heavy".into(), vec![closure_check("Z3-c-heavy", "Z3-free")]));
    items.push(("N-p-heavy".into(), vec![step_check("N-p-heavy")]));
    items
}

/// Parameters of the four constructions.
pub const WITNESSES: [(&str, &str); 4] = [("G1", "r=5"), ("G2", "k=5,r=8"), ("G3", "t=2,r=8"), ("G4", "r=8")];

fn witness_graph(family: &str, params: &str) -> Result<Graph, HarnessError> {
    Ok(FamilySpec::parse(family, params)?.build_unchecked()?.graph)
}

/// The four constructions, built without enforcing their claims.
pub fn witness_graphs() -> Result<Vec<(String, Graph)>, HarnessError> {
    WITNESSES.iter().map(|&(f, p)| Ok((format!("{f}({p})"), witness_graph(f, p)?))).collect()
}

/// Members of the two-triangle family up to `max_order` vertices.
pub fn obstruction_corpus(max_order: usize) -> Result<Vec<(String, Graph)>, HarnessError> {
    let mut out = vec![("L1".to_string(), l1()), ("L2".to_string(), l2())];
    for xs in p_family_grid(max_order) {
        let f = gen_p_family(xs)?;
        out.push((f.name, f.graph));
    }
    Ok(out)
}

pub fn plans(suite: &str, cfg: &SuiteConfig) -> Result<Vec<Plan>, HarnessError> {
    let plans = match suite {
        "closure-basics" => vec![
            plan(
                cfg.exhaustive(7, ""),
                vec![Assertion::new(Check::CClosure { policies: 5 }), Assertion::new(Check::RClosure { policies: 5 })],
            ),
            plan(
                cfg.sampled(0, CLOSURE_MODEL, "claw-o-heavy"),
                vec![
                    Assertion::new(Check::CClosure { policies: 5 }).with_floor(INCONCLUSIVE_FLOOR),
                    Assertion::new(Check::RClosure { policies: 5 }),
                ],
            ),
            plan(
                Corpus::explicit("K5 and C6", [("K5".into(), Graph::complete(5)), ("C6".into(), Graph::cycle(6))]),
                vec![Assertion::new(Check::CClosure { policies: 5 })],
            ),
        ],
        "regions" => vec![
            plan(cfg.exhaustive(7, "claw-o-heavy"), vec![Assertion::new(Check::Regions)]),
            plan(
                cfg.sampled(1, CLOSURE_MODEL, "claw-o-heavy"),
                vec![Assertion::new(Check::Regions).with_floor(INCONCLUSIVE_FLOOR)],
            ),
        ],
        "minimal-supergraph" => {
            vec![plan(cfg.exhaustive(6, "claw-free"), vec![Assertion::new(Check::MinimalSupergraph)])]
        }
        "stability" => {
            let mut out: Vec<Plan> = stability_items()
                .into_iter()
                .enumerate()
                .map(|(i, (cond, checks))| {
                    plan(
                        cfg.sampled(10 + i as u64, STABILITY_MODEL, format!("claw-o-heavy & {cond}")),
                        checks.into_iter().map(|c| Assertion::new(c).with_floor(INCONCLUSIVE_FLOOR)).collect(),
                    )
                })
                .collect();
            // conditions outside the stable list: violations are expected somewhere
            out.push(plan(
                cfg.sampled(20, STABILITY_MODEL, "claw-o-heavy"),
                ["Z2", "N", "W", "H", "B"]
                    .iter()
                    .map(|s| {
                        let c = format!("{s}-c-heavy");
                        Assertion::report_only(closure_check(&c, &c))
                    })
                    .collect(),
            ));
            out.push(plan(
                Corpus::explicit("constructions G1..G4", witness_graphs()?),
                vec![Assertion::report_only(closure_check("Z2-c-heavy", "Z2-c-heavy"))],
            ));
            out
        }
        "witnesses" => WITNESSES
            .iter()
            .map(|&(family, params)| {
                let g = witness_graph(family, params)?;
                Ok(plan(
                    Corpus::explicit(format!("{family}({params})"), [(family.to_string(), g)]),
                    vec![Assertion::new(Check::FamilyClaims { family: family.into(), params: params.into() })],
                ))
            })
            .collect::<Result<Vec<Plan>, HarnessError>>()?,
        "main-theorem" => {
            let mut out: Vec<Plan> = MAIN_PATTERNS
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let premise = main_premise(s);
                    plan(
                        cfg.sampled(30 + i as u64, MAIN_MODEL, premise.clone()),
                        vec![Assertion::new(Check::Hamiltonian { premise, exceptions: vec![] })
                            .with_floor(INCONCLUSIVE_FLOOR)],
                    )
                })
                .collect();
            out.push(plan(
                cfg.sampled(40, MAIN_MODEL, NET_P_HEAVY_PREMISE),
                vec![Assertion::new(Check::Hamiltonian { premise: NET_P_HEAVY_PREMISE.into(), exceptions: vec![] })
                    .with_floor(INCONCLUSIVE_FLOOR)],
            ));
            let corollaries = [
                "2-connected & claw-f-heavy & N-c-heavy",
                "2-connected & claw-o-heavy & N-f-heavy",
                "2-connected & claw-f-heavy & B-f-heavy",
                "2-connected & claw-f-heavy & Z1-f-heavy",
            ];
            out.push(plan(
                cfg.sampled(41, MAIN_MODEL, "2-connected & claw-o-heavy"),
                corollaries
                    .iter()
                    .map(|p| Assertion::new(Check::Hamiltonian { premise: (*p).into(), exceptions: vec![] }))
                    .collect(),
            ));
            out.push(plan(
                Corpus::explicit("complete graphs K10..K14", (10..=14).map(|n| (format!("K{n}"), Graph::complete(n)))),
                vec![Assertion::new(Check::Hamiltonian { premise: main_premise("P4"), exceptions: vec![] })],
            ));
            // nine-vertex obstructions show why the order bound is needed
            out.push(plan(
                Corpus::explicit("L1 and L2", [("L1".into(), l1()), ("L2".into(), l2())]),
                vec![Assertion::report_only(Check::Hamiltonian {
                    premise: "2-connected & claw-o-heavy & Z3-c-heavy".into(),
                    exceptions: vec![],
                })],
            ));
            out
        }
        "forbidden-pairs" => {
            let checks = forbidden_pair_checks();
            let all =
                |floor: u64| checks.iter().map(|c| Assertion::new(c.clone()).with_floor(floor)).collect::<Vec<_>>();
            vec![
                plan(cfg.sampled(50, GROWTH_MODEL, "2-connected & claw-free"), all(0)),
                plan(cfg.sampled(51, LINE_MODEL, "2-connected & claw-free"), all(0)),
                plan(Corpus::explicit("two-triangle family, order <= 14", obstruction_corpus(14)?), all(0)),
                plan(Corpus::explicit("C10", [("C10".into(), Graph::cycle(10))]), all(0)),
            ]
        }
        "obstructions" => vec![
            plan(
                Corpus::explicit("two-triangle family, order <= 14", obstruction_corpus(14)?),
                vec![Assertion::new(Check::Obstruction)],
            ),
            plan(cfg.exhaustive(7, "2-connected & claw-free"), vec![Assertion::new(Check::Obstruction)]),
            plan(cfg.sampled(60, GROWTH_MODEL, "2-connected & claw-free"), vec![Assertion::new(Check::Obstruction)]),
            plan(cfg.sampled(61, LINE_MODEL, "2-connected & claw-free"), vec![Assertion::new(Check::Obstruction)]),
        ],
        "arrows" => vec![plan(
            cfg.sampled(70, ARROW_MODEL, ""),
            arrow_checks()
                .into_iter()
                .map(|(c, drawn)| if drawn { Assertion::new(c) } else { Assertion::report_only(c) })
                .collect(),
        )],
        "conditions" => {
            let mut checks = vec![
                Check::implication("claw-f-heavy", "claw-o-heavy"),
                Check::implication("N-c-heavy", "N-p-heavy"),
                Check::NetFormula,
                Check::Classical,
            ];
            for s in ["P4", "Z2", "N", "W"] {
                for cond in ["o-heavy", "f-heavy", "c-heavy"] {
                    checks.push(Check::implication(format!("{s}-free"), format!("{s}-{cond}")));
                }
            }
            let assertions: Vec<Assertion> = checks.into_iter().map(Assertion::new).collect();
            vec![plan(cfg.exhaustive(7, ""), assertions.clone()), plan(cfg.sampled(80, ARROW_MODEL, ""), assertions)]
        }
        "oracles" => vec![
            plan(cfg.exhaustive(7, ""), vec![Assertion::new(Check::Oracles)]),
            plan(
                Corpus::explicit(
                    "Petersen, L1, L2",
                    [("petersen".into(), petersen()), ("L1".into(), l1()), ("L2".into(), l2())],
                ),
                vec![Assertion::new(Check::Oracles)],
            ),
        ],
        other => return Err(HarnessError::UnknownSuite(other.to_string())),
    };
    Ok(plans)
}

pub fn verify(suite: &str, cfg: &SuiteConfig) -> Result<VerificationReport, HarnessError> {
    let runs = plans(suite, cfg)?.iter().map(|p| run(&p.corpus, &p.assertions)).collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport::new(suite, runs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::Status;

    fn quick() -> SuiteConfig {
        SuiteConfig { n_max: 4, samples: 20, seed: 3 }
    }

    #[test]
    fn every_suite_plans_and_checks_compile() {
        for (name, _) in SUITES {
            let plans = plans(name, &quick()).unwrap();
            assert!(!plans.is_empty(), "{name}");
            for p in &plans {
                for a in &p.assertions {
                    a.check.compile().unwrap_or_else(|e| panic!("{name}: {}: {e}", a.check));
                }
            }
        }
        assert!(matches!(plans("nope", &quick()), Err(HarnessError::UnknownSuite(_))));
    }

    #[test]
    fn arrows_cover_both_diagrams() {
        let arrows = arrow_checks();
        assert_eq!(arrows.len(), F_HEAVY_ARROWS.len() + C_HEAVY_ARROWS.len());
        assert_eq!(arrows.iter().filter(|(_, drawn)| !drawn).count(), 3);
    }

    #[test]
    fn quick_runs_are_clean() {
        for suite in ["closure-basics", "regions", "minimal-supergraph", "oracles", "obstructions"] {
            let r = verify(suite, &quick()).unwrap();
            assert_eq!(r.violation_count(true), 0, "{}", r.summary());
            assert_ne!(r.status, Status::Failed);
        }
    }

    #[test]
    fn witness_suite_reports_the_failing_claims() {
        let r = verify("witnesses", &quick()).unwrap();
        let failed: Vec<&str> = r
            .runs
            .iter()
            .filter(|run| run.status() == Status::Failed)
            .map(|run| run.corpus.description.as_str())
            .collect();
        assert_eq!(failed, ["G1(r=5) (1 graphs)", "G4(r=8) (1 graphs)"]);
        assert!(r.stale_violations().unwrap().is_empty());
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
    }
}
