//! Coverage manifest: every verified statement with the suite and check
//! that exercise it.

use serde::Serialize;

use super::check::Check;
use super::suites::{
    arrow_checks, closure_check, forbidden_pair_checks, main_premise, step_check, MAIN_PATTERNS, NET_P_HEAVY_PREMISE,
    WITNESSES,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ManifestEntry {
    pub item: String,
    pub suite: &'static str,
    pub check: Check,
}

fn entry(item: impl Into<String>, suite: &'static str, check: Check) -> ManifestEntry {
    ManifestEntry { item: item.into(), suite, check }
}

fn hamiltonian(premise: impl Into<String>) -> Check {
    Check::Hamiltonian { premise: premise.into(), exceptions: vec![] }
}

pub fn manifest() -> Vec<ManifestEntry> {
    let mut m = vec![
        entry("r-closure is unique and preserves circumference", "closure-basics", Check::RClosure { policies: 5 }),
        entry(
            "c-closure is unique, closed, claw-free and K112-free, and preserves circumference",
            "closure-basics",
            Check::CClosure { policies: 5 },
        ),
        entry("c-closure has no heavy pair", "closure-basics", Check::CClosure { policies: 5 }),
        entry(
            "r-closure has the fewest edges among K112-free supergraphs",
            "minimal-supergraph",
            Check::MinimalSupergraph,
        ),
        entry("region structure of the c-closure", "regions", Check::Regions),
        entry("two-triangle obstruction in non-hamiltonian claw-free graphs", "obstructions", Check::Obstruction),
        entry("degree conditions of Dirac, Ore and Fan", "conditions", Check::Classical),
        entry("claw-f-heavy implies claw-o-heavy", "conditions", Check::implication("claw-f-heavy", "claw-o-heavy")),
        entry("N-c-heavy implies N-p-heavy", "conditions", Check::implication("N-c-heavy", "N-p-heavy")),
        entry("c-heavy nets by unmatched heavy vertices", "conditions", Check::NetFormula),
        entry("exact cycle oracles", "oracles", Check::Oracles),
        entry("N-p-heavy survives every c-closure step", "stability", step_check("N-p-heavy")),
        entry("Z1-c-heavy is c-stable", "stability", closure_check("Z1-c-heavy", "Z1-c-heavy")),
        entry("c-closure of a Z3-c-heavy graph is Z3-free", "stability", closure_check("Z3-c-heavy", "Z3-free")),
        entry(
            "claw-o-heavy N-p-heavy 2-connected graphs are hamiltonian",
            "main-theorem",
            hamiltonian(NET_P_HEAVY_PREMISE),
        ),
    ];
    for i in 4..=6 {
        m.push(entry(
            format!("P{i}-c-heavy survives every c-closure step"),
            "stability",
            step_check(&format!("P{i}-c-heavy")),
        ));
    }
    for i in 5..=6 {
        m.push(entry(
            format!("c-closure of a P{i}-c-heavy graph is P{i}-free"),
            "stability",
            closure_check(&format!("P{i}-c-heavy"), &format!("P{i}-free")),
        ));
    }
    for (family, params) in WITNESSES {
        m.push(entry(
            format!("{family} loses a c-heavy condition in its c-closure"),
            "witnesses",
            Check::FamilyClaims { family: family.into(), params: params.into() },
        ));
    }
    for s in MAIN_PATTERNS {
        m.push(entry(
            format!("claw-o-heavy {s}-c-heavy 2-connected graphs on 10+ vertices are hamiltonian"),
            "main-theorem",
            hamiltonian(main_premise(s)),
        ));
    }
    for premise in [
        "2-connected & claw-f-heavy & N-c-heavy",
        "2-connected & claw-o-heavy & N-f-heavy",
        "2-connected & claw-f-heavy & B-f-heavy",
        "2-connected & claw-f-heavy & Z1-f-heavy",
    ] {
        m.push(entry(format!("{premise} graphs are hamiltonian"), "main-theorem", hamiltonian(premise)));
    }
    for check in forbidden_pair_checks() {
        m.push(entry(format!("forbidden pair: {check}"), "forbidden-pairs", check));
    }
    for (check, drawn) in arrow_checks() {
        let tag = if drawn { "drawn arrow" } else { "alternative arrow" };
        m.push(entry(format!("{tag}: {check}"), "arrows", check));
    }
    for s in ["P4", "Z2", "N", "W"] {
        for cond in ["o-heavy", "f-heavy", "c-heavy"] {
            m.push(entry(
                format!("{s}-free implies {s}-{cond}"),
                "conditions",
                Check::implication(format!("{s}-free"), format!("{s}-{cond}")),
            ));
        }
    }
    m
}
