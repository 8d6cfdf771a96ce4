//! Per-graph assertions. A [`Check`] is plain data so that reports can name
//! it and a recorded witness can be re-run against it; [`Check::compile`]
//! resolves its predicates once per run.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::{
    check_closed_shape, closure_unchecked, eligible_vertices, is_eligible, regions_of, ClosureKind, ClosureTrace,
    Policy,
};
use crate::cycles::{self, circumference, dirac_ore_fan_sanity, hamiltonian_cycle, naive};
use crate::families::{find_induced_p_member, gen_p_family, l1, l2, FamilySpec, Predicate};
use crate::graph::{Graph, VertexSet};
use crate::heavy::{copy_is_c_heavy_with, is_claw_o_heavy, net_roles, HeavyProfile};
use crate::pattern::{induced_copy_sets, is_claw_free, is_isomorphic, is_k112_free, make_pattern, PatternKind};

use super::HarnessError;

/// Seeds of the random policies used for order-independence, after the
/// smallest-first policy.
pub const POLICY_SEEDS: [u64; 8] = [0x5eed, 17, 4242, 99_991, 7, 123_456_789, 31_337, 2024];

/// Per-step circumference is only recomputed up to this order.
pub const STEP_CIRCUMFERENCE_ORDER: usize = 9;

/// Naive oracles are only run up to this order.
pub const NAIVE_ORACLE_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Check {
    /// c-closure battery on claw-o-heavy graphs: trace validity, monotone,
    /// idempotent, policy independent, degree dominance and claw-o-heaviness
    /// after each step, closed shape, circumference.
    CClosure {
        policies: usize,
    },
    /// The same battery for the r-closure of claw-free graphs.
    RClosure {
        policies: usize,
    },
    /// Region nonseparability, frontier/interior adjacency, interior paths.
    Regions,
    /// No K112-free supergraph of a claw-free graph has fewer edges than
    /// its r-closure.
    MinimalSupergraph,
    /// Every graph along the c-closure sequence satisfies `condition`.
    StepPreserves {
        premise: String,
        condition: String,
    },
    /// The c-closure satisfies `conclusion`.
    ClosureSatisfies {
        premise: String,
        conclusion: String,
    },
    /// `premise` implies hamiltonian, up to isomorphism with the listed
    /// families.
    Hamiltonian {
        premise: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        exceptions: Vec<String>,
    },
    /// Non-hamiltonian 2-connected claw-free graphs contain an induced
    /// member of the two-triangle family.
    Obstruction,
    Implication {
        premise: String,
        conclusion: String,
    },
    /// Net copies: c-heavy iff two heavy vertices outside the matched pairs.
    NetFormula,
    /// Subset DP against naive search, plus certificates.
    Oracles,
    /// Dirac, Ore and Fan conditions imply hamiltonian.
    Classical,
    /// The graph is the named family member and all its required claims hold.
    FamilyClaims {
        family: String,
        params: String,
    },
}

impl Check {
    pub fn implication(premise: impl Into<String>, conclusion: impl Into<String>) -> Check {
        Check::Implication { premise: premise.into(), conclusion: conclusion.into() }
    }

    pub fn compile(&self) -> Result<Compiled, HarnessError> {
        let parse = |s: &str| s.parse::<Predicate>().map_err(HarnessError::from);
        let kind = match self {
            Check::CClosure { policies } => Kind::Closure { kind: ClosureKind::C, policies: *policies },
            Check::RClosure { policies } => Kind::Closure { kind: ClosureKind::R, policies: *policies },
            Check::Regions => Kind::Regions,
            Check::MinimalSupergraph => Kind::MinimalSupergraph,
            Check::StepPreserves { premise, condition } => {
                Kind::StepPreserves { premise: parse(premise)?, condition: parse(condition)? }
            }
            Check::ClosureSatisfies { premise, conclusion } => {
                Kind::ClosureSatisfies { premise: parse(premise)?, conclusion: parse(conclusion)? }
            }
            Check::Hamiltonian { premise, exceptions } => {
                let exceptions = exceptions
                    .iter()
                    .map(|name| match name.as_str() {
                        "L1" => Ok(l1()),
                        "L2" => Ok(l2()),
                        other => Ok(FamilySpec::parse(other, "")?.build()?.graph),
                    })
                    .collect::<Result<Vec<Graph>, HarnessError>>()?;
                Kind::Hamiltonian { premise: parse(premise)?, exceptions }
            }
            Check::Obstruction => Kind::Obstruction { premise: parse("2-connected & claw-free")? },
            Check::Implication { premise, conclusion } => {
                Kind::Implication { premise: parse(premise)?, conclusion: parse(conclusion)? }
            }
            Check::NetFormula => Kind::NetFormula,
            Check::Oracles => Kind::Oracles,
            Check::Classical => Kind::Classical,
            Check::FamilyClaims { family, params } => Kind::FamilyClaims { spec: FamilySpec::parse(family, params)? },
        };
        Ok(Compiled { kind })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::CClosure { policies } => write!(f, "c-closure battery ({policies} policies)"),
            Check::RClosure { policies } => write!(f, "r-closure battery ({policies} policies)"),
            Check::Regions => write!(f, "region structure"),
            Check::MinimalSupergraph => write!(f, "r-closure is a least K112-free supergraph"),
            Check::StepPreserves { premise, condition } => {
                write!(f, "{premise} => every c-closure step is {condition}")
            }
            Check::ClosureSatisfies { premise, conclusion } => {
                write!(f, "{premise} => c-closure is {conclusion}")
            }
            Check::Hamiltonian { premise, exceptions } if exceptions.is_empty() => {
                write!(f, "{premise} => hamiltonian")
            }
            Check::Hamiltonian { premise, exceptions } => {
                write!(f, "{premise} => hamiltonian or one of {}", exceptions.join(", "))
            }
            Check::Obstruction => {
                write!(f, "non-hamiltonian 2-connected claw-free => induced two-triangle obstruction")
            }
            Check::Implication { premise, conclusion } => write!(f, "{premise} => {conclusion}"),
            Check::NetFormula => write!(f, "net c-heavy iff two unmatched heavy vertices"),
            Check::Oracles => write!(f, "cycle oracles agree with naive search"),
            Check::Classical => write!(f, "Dirac/Ore/Fan => hamiltonian"),
            Check::FamilyClaims { family, params } if params.is_empty() => write!(f, "{family} claims"),
            Check::FamilyClaims { family, params } => write!(f, "{family}({params}) claims"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The hypotheses do not apply to this graph.
    Vacuous,
    Held,
    Violated(String),
}

impl Outcome {
    fn from_failures(failures: Vec<String>) -> Outcome {
        if failures.is_empty() {
            Outcome::Held
        } else {
            Outcome::Violated(failures.join("; "))
        }
    }
}

enum Kind {
    Closure { kind: ClosureKind, policies: usize },
    Regions,
    MinimalSupergraph,
    StepPreserves { premise: Predicate, condition: Predicate },
    ClosureSatisfies { premise: Predicate, conclusion: Predicate },
    Hamiltonian { premise: Predicate, exceptions: Vec<Graph> },
    Obstruction { premise: Predicate },
    Implication { premise: Predicate, conclusion: Predicate },
    NetFormula,
    Oracles,
    Classical,
    FamilyClaims { spec: FamilySpec },
}

pub struct Compiled {
    kind: Kind,
}

impl Compiled {
    pub fn evaluate(&self, g: &Graph) -> Outcome {
        match &self.kind {
            Kind::Closure { kind, policies } => closure_battery(g, *kind, *policies),
            Kind::Regions => {
                if !is_claw_o_heavy(g) {
                    return Outcome::Vacuous;
                }
                let (h, _) = closure_unchecked(g, ClosureKind::C, Policy::Smallest);
                let failures = regions_of(g, h).region_failures(g);
                Outcome::from_failures(failures.iter().map(ToString::to_string).collect())
            }
            Kind::MinimalSupergraph => minimal_supergraph(g),
            Kind::StepPreserves { premise, condition } => {
                if !is_claw_o_heavy(g) || !premise.eval(g) {
                    return Outcome::Vacuous;
                }
                let (_, trace) = closure_unchecked(g, ClosureKind::C, Policy::Smallest);
                let stages = trace.replay(g);
                match stages.iter().position(|h| !condition.eval(h)) {
                    None => Outcome::Held,
                    Some(i) => Outcome::Violated(format!(
                        "not {condition} after completing at {} (step {})",
                        trace.steps[i].vertex,
                        i + 1
                    )),
                }
            }
            Kind::ClosureSatisfies { premise, conclusion } => {
                if !is_claw_o_heavy(g) || !premise.eval(g) {
                    return Outcome::Vacuous;
                }
                let (h, _) = closure_unchecked(g, ClosureKind::C, Policy::Smallest);
                if conclusion.eval(&h) {
                    Outcome::Held
                } else {
                    Outcome::Violated(format!("closure {} is not {conclusion}", h.to_graph6()))
                }
            }
            Kind::Hamiltonian { premise, exceptions } => {
                if !premise.eval(g) {
                    return Outcome::Vacuous;
                }
                match cycles::is_hamiltonian(g) {
                    Ok(true) => Outcome::Held,
                    Ok(false) if exceptions.iter().any(|e| is_isomorphic(g, e)) => Outcome::Held,
                    Ok(false) => Outcome::Violated("not hamiltonian".into()),
                    Err(e) => Outcome::Violated(e.to_string()),
                }
            }
            Kind::Obstruction { premise } => {
                if !premise.eval(g) || !matches!(cycles::is_hamiltonian(g), Ok(false)) {
                    return Outcome::Vacuous;
                }
                match find_induced_p_member(g) {
                    None => Outcome::Violated("no induced obstruction".into()),
                    Some(w) => {
                        let member = gen_p_family(w.params).expect("search only yields valid parameters");
                        if is_isomorphic(&g.induced(w.copy.vertices).0, &member.graph) {
                            Outcome::Held
                        } else {
                            Outcome::Violated(format!(
                                "witness {} does not induce {}",
                                fmt_set(w.copy.vertices),
                                member.name
                            ))
                        }
                    }
                }
            }
            Kind::Implication { premise, conclusion } => {
                if !premise.eval(g) {
                    Outcome::Vacuous
                } else if conclusion.eval(g) {
                    Outcome::Held
                } else {
                    Outcome::Violated(format!("{premise} but not {conclusion}"))
                }
            }
            Kind::NetFormula => net_formula(g),
            Kind::Oracles => oracles(g),
            Kind::Classical => match dirac_ore_fan_sanity(g) {
                Ok(r) if !(r.dirac || r.ore || r.fan) => Outcome::Vacuous,
                Ok(r) if r.violated() => Outcome::Violated(format!("{r:?}")),
                Ok(_) => Outcome::Held,
                Err(e) => Outcome::Violated(e.to_string()),
            },
            Kind::FamilyClaims { spec } => match spec.build_unchecked() {
                Err(e) => Outcome::Violated(e.to_string()),
                Ok(fam) if fam.graph != *g => Outcome::Violated(format!("graph is not {}", fam.name)),
                Ok(fam) => Outcome::from_failures(
                    fam.failed_claims().map(|c| format!("claim fails: {}", c.statement)).collect(),
                ),
            },
        }
    }
}

fn fmt_set(s: VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn policy(i: usize) -> Policy {
    match i {
        0 => Policy::Smallest,
        _ => Policy::Random(POLICY_SEEDS[(i - 1) % POLICY_SEEDS.len()] + (i / POLICY_SEEDS.len().max(1)) as u64),
    }
}

fn class_holds(g: &Graph, kind: ClosureKind) -> bool {
    match kind {
        ClosureKind::R => is_claw_free(g),
        ClosureKind::C => is_claw_o_heavy(g),
    }
}

fn trace_failures(g: &Graph, h: &Graph, trace: &ClosureTrace, kind: ClosureKind, out: &mut Vec<String>) {
    let mut cur = g.clone();
    let check_circ = g.order() <= STEP_CIRCUMFERENCE_ORDER;
    let mut circ = if check_circ { circumference(g).ok().map(|c| c.length) } else { None };
    for (i, step) in trace.steps.iter().enumerate() {
        let x = step.vertex;
        let nx = cur.neighbors(x);
        if !is_eligible(&cur, kind, x) {
            out.push(format!("step {}: {x} was not eligible", i + 1));
        }
        if step.added.iter().any(|&(u, v)| !nx.contains(u) || !nx.contains(v) || cur.has_edge(u, v)) {
            out.push(format!("step {}: added an edge outside N({x}) or already present", i + 1));
        }
        let next = cur.with_edges(step.added.iter().copied());
        if !next.is_clique(nx) {
            out.push(format!("step {}: N({x}) not completed", i + 1));
        }
        if kind == ClosureKind::C {
            let dx = next.degree(x);
            if let Some(y) = nx.iter().find(|&y| next.degree(y) < dx) {
                out.push(format!("step {}: d({y}) < d({x}) after completion", i + 1));
            }
        }
        if !class_holds(&next, kind) {
            out.push(format!("step {}: completion left the input class", i + 1));
        }
        if check_circ {
            let c = circumference(&next).ok().map(|c| c.length);
            if c != circ {
                out.push(format!("step {}: circumference {circ:?} -> {c:?}", i + 1));
            }
            circ = c;
        }
        cur = next;
    }
    if cur != *h {
        out.push("trace replay differs from the closure".into());
    }
}

fn closure_battery(g: &Graph, kind: ClosureKind, policies: usize) -> Outcome {
    if !class_holds(g, kind) {
        return Outcome::Vacuous;
    }
    let mut out = Vec::new();
    let (h, trace) = closure_unchecked(g, kind, Policy::Smallest);
    if h.order() != g.order() || !g.is_spanning_subgraph_of(&h) {
        out.push("not monotone".into());
    }
    trace_failures(g, &h, &trace, kind, &mut out);
    if !eligible_vertices(&h, kind).is_empty() {
        out.push("closure still has an eligible vertex".into());
    }
    if closure_unchecked(&h, kind, Policy::Smallest).0 != h {
        out.push("not idempotent".into());
    }
    for i in 1..policies {
        let p = policy(i);
        let (other, trace) = closure_unchecked(g, kind, p);
        if other != h {
            out.push(format!("policy {p:?} reaches {} instead of {}", other.to_graph6(), h.to_graph6()));
            break;
        }
        let _ = trace;
    }
    let shape = check_closed_shape(&h, kind);
    if !shape.passed() {
        out.push(format!("closure shape fails: {}", shape.failures().join(", ")));
    }
    match (circumference(g), circumference(&h)) {
        (Ok(a), Ok(b)) if a.length != b.length => {
            out.push(format!("circumference {} -> {}", a.length, b.length));
        }
        (Err(e), _) | (_, Err(e)) => out.push(e.to_string()),
        _ => {}
    }
    Outcome::from_failures(out)
}

/// Visits every `k`-subset of `0..m` as a bitmask, in increasing order.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if k > m {
        return false;
    }
    if k == 0 {
        return f(0);
    }
    let limit = 1u64 << m;
    let mut s = (1u64 << k) - 1;
    while s < limit {
        if f(s) {
            return true;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    false
}

fn minimal_supergraph(g: &Graph) -> Outcome {
    if !is_claw_free(g) {
        return Outcome::Vacuous;
    }
    let (h, _) = closure_unchecked(g, ClosureKind::R, Policy::Smallest);
    if !is_k112_free(&h) {
        return Outcome::Violated("r-closure is not K112-free".into());
    }
    let added = h.edge_count() - g.edge_count();
    let n = g.order();
    let missing: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let mut found = None;
    for k in 0..added {
        let hit = for_each_subset(missing.len(), k, |mask| {
            let extra = (0..missing.len()).filter(|i| mask >> i & 1 == 1).map(|i| missing[i]);
            let cand = g.with_edges(extra);
            if is_k112_free(&cand) {
                found = Some(cand);
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    match found {
        None => Outcome::Held,
        Some(c) => Outcome::Violated(format!(
            "K112-free supergraph {} adds {} edges, r-closure adds {added}",
            c.to_graph6(),
            c.edge_count() - g.edge_count()
        )),
    }
}

fn net_formula(g: &Graph) -> Outcome {
    let net = make_pattern(PatternKind::Net).expect("catalog");
    let copies = induced_copy_sets(g, &net.graph);
    if copies.is_empty() {
        return Outcome::Vacuous;
    }
    let p = HeavyProfile::new(g);
    for copy in copies {
        let roles = net_roles(g, copy).expect("copy induces a net");
        let matched = |u: usize, v: usize| {
            (0..3).any(|i| {
                let (a, b) = (roles.triangle[i], roles.pendants[i]);
                (a, b) == (u, v) || (b, a) == (u, v)
            })
        };
        let heavy: Vec<usize> = copy.iter().filter(|&v| p.heavy.contains(v)).collect();
        let formula = heavy.iter().enumerate().any(|(i, &u)| heavy[i + 1..].iter().any(|&v| !matched(u, v)));
        if formula != copy_is_c_heavy_with(g, &p, copy) {
            return Outcome::Violated(format!("net {} disagrees (formula {formula})", fmt_set(copy)));
        }
    }
    Outcome::Held
}

fn oracles(g: &Graph) -> Outcome {
    let n = g.order();
    if n > NAIVE_ORACLE_ORDER {
        return Outcome::Vacuous;
    }
    let mut out = Vec::new();
    let dp = match (hamiltonian_cycle(g), circumference(g)) {
        (Ok(h), Ok(c)) => (h, c),
        (Err(e), _) | (_, Err(e)) => return Outcome::Violated(e.to_string()),
    };
    let (ham, circ) = dp;
    if ham.is_some() != naive::is_hamiltonian(g) {
        out.push(format!("hamiltonian: dp {} naive {}", ham.is_some(), !ham.is_some()));
    }
    if let Some(c) = &ham {
        if c.length != n || !c.is_valid_in(g) {
            out.push("bad hamiltonian certificate".into());
        }
    }
    let naive_circ = naive::circumference(g);
    if circ.length != naive_circ {
        out.push(format!("circumference: dp {} naive {naive_circ}", circ.length));
    }
    match &circ.certificate {
        Some(c) if c.length != circ.length || !c.is_valid_in(g) => out.push("bad cycle certificate".into()),
        None if circ.length != 0 => out.push("missing cycle certificate".into()),
        _ => {}
    }
    if n >= 3 && (circ.length == n) != ham.is_some() {
        out.push("circumference = n disagrees with hamiltonicity".into());
    }
    Outcome::from_failures(out)
}
