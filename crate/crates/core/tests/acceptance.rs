//! Acceptance criteria. Each test prints one status line straight to the
//! terminal (bypassing capture) and then asserts.

use std::io::Write;
use std::time::Instant;

use heavy_core::cycles::circumference;
use heavy_core::families::{gen_g1, gen_g2, gen_g3, gen_g4, l1, l2, petersen, FamilyError, FamilyGraph, G2Variant};
use heavy_core::harness::{
    arrow_checks, forbidden_pair_checks, main_premise, obstruction_corpus, run, stability_items, Assertion, Check,
    Corpus, RunReport, Status, ARROW_MODEL, CLOSURE_MODEL, GROWTH_MODEL, LINE_MODEL, MAIN_MODEL, MAIN_PATTERNS,
    NET_P_HEAVY_PREMISE, STABILITY_MODEL,
};
use heavy_core::{is_hamiltonian, Graph};

const SEED: u64 = 20_241_015;

fn line(id: u32, title: &str, passed: bool, detail: &str, started: Instant) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    let secs = started.elapsed().as_secs_f64();
    let text = format!("acceptance {id:>2} {verdict} {title}: {detail} [{secs:.1}s]\n");
    let _ = std::io::stderr().write_all(text.as_bytes());
}

fn exhaustive(filter: &str) -> Corpus {
    Corpus::Exhaustive { n_min: 0, n_max: 7, filter: filter.into() }
}

fn sampled(model: heavy_core::families::RandomModel, slot: u64, filter: &str, target: u64) -> Corpus {
    Corpus::Sampled { model, seed: SEED + slot, filter: filter.into(), target, budget: target * 1000 }
}

/// The sampled corpus of the second criterion, shared with later ones.
fn sampled_claw_o_heavy() -> Corpus {
    sampled(CLOSURE_MODEL, 0, "claw-o-heavy", 10_000)
}

struct Tally {
    graphs: u64,
    instances: u64,
    violations: u64,
    worst: Status,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { graphs: 0, instances: 0, violations: 0, worst: Status::Passed, notes: Vec::new() }
    }

    fn add(&mut self, r: &RunReport) {
        self.graphs += r.corpus.accepted;
        for a in r.assertions.iter().filter(|a| a.fatal) {
            self.instances += a.instances;
            self.violations += a.violation_count;
            self.worst = self.worst.max(a.status);
            if a.status != Status::Passed {
                let first = a.violations.first().map(|v| format!(", e.g. {} ({})", v.graph6, v.detail));
                self.notes.push(format!(
                    "{} {}: {} instances, {} violations{}",
                    a.status,
                    a.name,
                    a.instances,
                    a.violation_count,
                    first.unwrap_or_default()
                ));
            }
        }
    }

    fn run(&mut self, corpus: &Corpus, assertions: &[Assertion]) {
        let r = run(corpus, assertions).expect("valid configuration");
        self.add(&r);
    }

    fn finish(self, id: u32, title: &str, started: Instant) {
        let passed = self.worst == Status::Passed;
        let mut detail =
            format!("{} graphs, {} instances, {} violations", self.graphs, self.instances, self.violations);
        for n in &self.notes {
            detail.push_str("; ");
            detail.push_str(n);
        }
        line(id, title, passed, &detail, started);
        assert!(passed, "{title}: {detail}");
    }
}

#[test]
fn criterion_01_closure_exhaustive() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    t.run(&exhaustive("claw-o-heavy"), &[Assertion::new(Check::CClosure { policies: 5 })]);
    assert!(t.instances > 0);
    t.finish(1, "c-closure battery, all claw-o-heavy graphs n <= 7", t0);
}

#[test]
fn criterion_02_closure_sampled() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    t.run(&sampled_claw_o_heavy(), &[Assertion::new(Check::CClosure { policies: 5 })]);
    assert_eq!(t.graphs, 10_000);
    t.finish(2, "c-closure battery, 10000 sampled claw-o-heavy graphs 8 <= n <= 13", t0);
}

#[test]
fn criterion_03_minimal_supergraph() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let corpus = Corpus::Exhaustive { n_min: 0, n_max: 6, filter: "claw-free".into() };
    t.run(&corpus, &[Assertion::new(Check::MinimalSupergraph)]);
    t.finish(3, "r-closure is a least K112-free supergraph, claw-free n <= 6", t0);
}

#[test]
fn criterion_04_regions() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let a = [Assertion::new(Check::Regions)];
    t.run(&exhaustive("claw-o-heavy"), &a);
    t.run(&sampled_claw_o_heavy(), &a);
    t.finish(4, "region structure on the corpora of criteria 1 and 2", t0);
}

#[test]
fn criterion_05_stability() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    for (i, (condition, checks)) in stability_items().into_iter().enumerate() {
        let corpus = sampled(STABILITY_MODEL, 10 + i as u64, &format!("claw-o-heavy & {condition}"), 1000);
        let a: Vec<Assertion> = checks.into_iter().map(|c| Assertion::new(c).with_floor(1000)).collect();
        t.run(&corpus, &a);
    }
    t.finish(5, "stability per step and of the closure, 1000 samples per condition, n <= 13", t0);
}

#[test]
fn criterion_06_instability_witnesses() {
    let t0 = Instant::now();
    let built: [(&str, Result<FamilyGraph, FamilyError>); 4] = [
        ("G1(5)", gen_g1(5)),
        ("G2(5,8)", gen_g2(5, 8, G2Variant::Embedded)),
        ("G3(2,8)", gen_g3(2, 8)),
        ("G4(8)", gen_g4(8)),
    ];
    let failures: Vec<String> =
        built.iter().filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}"))).collect();
    let detail = if failures.is_empty() {
        "all four constructions assert".to_string()
    } else {
        format!("{} of 4 constructions fail; {}", failures.len(), failures.join("; "))
    };
    line(6, "instability witnesses G1..G4", failures.is_empty(), &detail, t0);
    assert!(failures.is_empty(), "{detail}");
}

#[test]
fn criterion_07_main_theorem() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let premises = MAIN_PATTERNS.iter().map(|s| main_premise(s)).chain([NET_P_HEAVY_PREMISE.to_string()]);
    for (i, premise) in premises.enumerate() {
        let corpus = sampled(MAIN_MODEL, 30 + i as u64, &premise, 200);
        t.run(&corpus, &[Assertion::new(Check::Hamiltonian { premise, exceptions: vec![] }).with_floor(100)]);
    }
    t.finish(7, "S-c-heavy main result for nine S plus net p-heavy, 10 <= n <= 14", t0);
}

#[test]
fn criterion_08_forbidden_pairs() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let a: Vec<Assertion> = forbidden_pair_checks().into_iter().map(Assertion::new).collect();
    t.run(&sampled(GROWTH_MODEL, 50, "2-connected & claw-free", 3000), &a);
    t.run(&sampled(LINE_MODEL, 51, "2-connected & claw-free", 3000), &a);
    let mut explicit = obstruction_corpus(14).expect("grid");
    explicit.push(("C10".into(), Graph::cycle(10)));
    t.run(&Corpus::explicit("L1, L2, two-triangle family, C10", explicit), &a);
    t.finish(8, "claw-free pairs with N, P6, W, Z3 (L1 and L2 excepted), n <= 13 plus explicit", t0);
}

#[test]
fn criterion_09_obstructions() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let a = [Assertion::new(Check::Obstruction)];
    t.run(&exhaustive("claw-o-heavy"), &a);
    t.run(&sampled_claw_o_heavy(), &a);
    t.run(&Corpus::explicit("two-triangle family", obstruction_corpus(14).expect("grid")), &a);
    t.finish(9, "two-triangle obstruction in non-hamiltonian 2-connected claw-free graphs", t0);
}

#[test]
fn criterion_10_arrows() {
    let t0 = Instant::now();
    let assertions: Vec<Assertion> = arrow_checks()
        .into_iter()
        .map(|(c, drawn)| if drawn { Assertion::new(c) } else { Assertion::report_only(c) })
        .collect();
    let r = run(&sampled(ARROW_MODEL, 70, "", 10_000), &assertions).expect("valid configuration");
    assert_eq!(r.corpus.accepted, 10_000);
    let mut t = Tally::new();
    t.add(&r);
    for a in r.assertions.iter().filter(|a| !a.fatal) {
        t.notes.push(format!("report-only {}: {} violations", a.name, a.violation_count));
    }
    t.finish(10, "implication arrows between f-heavy and c-heavy conditions, 10000 graphs n <= 12", t0);
}

#[test]
fn criterion_11_oracles() {
    let t0 = Instant::now();
    let mut t = Tally::new();
    let a = [Assertion::new(Check::Oracles)];
    t.run(&exhaustive(""), &a);
    let named = [("petersen".to_string(), petersen()), ("L1".into(), l1()), ("L2".into(), l2())];
    t.run(&Corpus::explicit("Petersen, L1, L2", named), &a);
    let petersen_length = circumference(&petersen()).expect("small").length;
    let l_hamiltonian = [l1(), l2()].iter().map(|g| is_hamiltonian(g).expect("small")).collect::<Vec<_>>();
    if petersen_length != 9 {
        t.worst = Status::Failed;
        t.notes.push(format!("Petersen circumference {petersen_length}"));
    }
    if l_hamiltonian.iter().any(|h| *h) {
        t.worst = Status::Failed;
        t.notes.push(format!("L1/L2 hamiltonian: {l_hamiltonian:?}"));
    }
    t.notes.push(format!("Petersen circumference {petersen_length}, L1 and L2 non-hamiltonian"));
    t.finish(11, "subset DP oracles against naive search, all graphs n <= 7", t0);
}
