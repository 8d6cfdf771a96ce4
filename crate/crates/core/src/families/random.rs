//! Graph predicates given as `&`-joined atoms, random graph models, and a
//! seeded rejection sampler.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::is_hamiltonian;
use crate::graph::Graph;
use crate::heavy::{is_claw_o_heavy, satisfies, ConditionKind, HeavyProfile};
use crate::pattern::{is_claw_free, make_pattern, PatternKind, PatternSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("unknown predicate atom {0:?}")]
    UnknownAtom(String),
    #[error("p-heavy applies to the net only: {0:?}")]
    NotNet(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Any,
    Complete,
    Connected,
    TwoConnected,
    ClawFree,
    ClawOHeavy,
    Hamiltonian,
    NonHamiltonian,
    /// `n>=k`
    MinOrder(usize),
    /// `n<=k`
    MaxOrder(usize),
    /// No nonadjacent pair with degree sum at least n.
    NoHeavyPair,
    Condition {
        pattern: Box<PatternSpec>,
        kind: ConditionKind,
    },
}

impl Atom {
    pub fn eval(&self, g: &Graph) -> bool {
        match self {
            Atom::Any => true,
            Atom::Complete => g.is_clique(g.vertices()),
            Atom::Connected => g.is_connected(),
            Atom::TwoConnected => g.is_two_connected(),
            Atom::ClawFree => is_claw_free(g),
            Atom::ClawOHeavy => is_claw_o_heavy(g),
            Atom::Hamiltonian => is_hamiltonian(g).unwrap_or(false),
            Atom::NonHamiltonian => matches!(is_hamiltonian(g), Ok(false)),
            Atom::MinOrder(k) => g.order() >= *k,
            Atom::MaxOrder(k) => g.order() <= *k,
            Atom::NoHeavyPair => !HeavyProfile::new(g).has_heavy_pair(g),
            Atom::Condition { pattern, kind } => satisfies(g, pattern, *kind),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Any => write!(f, "any"),
            Atom::Complete => write!(f, "complete"),
            Atom::Connected => write!(f, "connected"),
            Atom::TwoConnected => write!(f, "2-connected"),
            Atom::ClawFree => write!(f, "claw-free"),
            Atom::ClawOHeavy => write!(f, "claw-o-heavy"),
            Atom::Hamiltonian => write!(f, "hamiltonian"),
            Atom::NonHamiltonian => write!(f, "non-hamiltonian"),
            Atom::MinOrder(k) => write!(f, "n>={k}"),
            Atom::MaxOrder(k) => write!(f, "n<={k}"),
            Atom::NoHeavyPair => write!(f, "no-heavy-pair"),
            Atom::Condition { pattern, kind } => write!(f, "{}-{kind}", pattern.kind),
        }
    }
}

impl FromStr for Atom {
    type Err = PredicateError;
    fn from_str(raw: &str) -> Result<Self, PredicateError> {
        let s = raw.trim();
        let fixed = match s.to_ascii_lowercase().as_str() {
            "any" | "true" | "" => Some(Atom::Any),
            "complete" => Some(Atom::Complete),
            "connected" => Some(Atom::Connected),
            "2-connected" | "two-connected" => Some(Atom::TwoConnected),
            "claw-free" => Some(Atom::ClawFree),
            "claw-o-heavy" => Some(Atom::ClawOHeavy),
            "hamiltonian" => Some(Atom::Hamiltonian),
            "non-hamiltonian" => Some(Atom::NonHamiltonian),
            "no-heavy-pair" => Some(Atom::NoHeavyPair),
            _ => None,
        };
        if let Some(a) = fixed {
            return Ok(a);
        }
        let unknown = || PredicateError::UnknownAtom(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        for (op, make) in [(">=", Atom::MinOrder as fn(usize) -> Atom), ("<=", Atom::MaxOrder)] {
            if let Some(k) = compact.strip_prefix('n').and_then(|r| r.strip_prefix(op)) {
                return k.parse().map(make).map_err(|_| unknown());
            }
        }
        let suffixes = [
            ("-free", ConditionKind::Free),
            ("-o-heavy", ConditionKind::OHeavy),
            ("-f-heavy", ConditionKind::FHeavy),
            ("-c-heavy", ConditionKind::CHeavy),
            ("-p-heavy", ConditionKind::NPHeavy),
        ];
        for (suffix, kind) in suffixes {
            if let Some(name) = s.strip_suffix(suffix) {
                let pk: PatternKind = name.parse().map_err(|_| unknown())?;
                if kind == ConditionKind::NPHeavy && !pk.is_net() {
                    return Err(PredicateError::NotNet(s.to_string()));
                }
                let pattern = make_pattern(pk).map_err(|_| unknown())?;
                return Ok(Atom::Condition { pattern: Box::new(pattern), kind });
            }
        }
        Err(unknown())
    }
}

/// A conjunction of atoms, evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    pub atoms: Vec<Atom>,
}

impl Predicate {
    pub fn any() -> Predicate {
        Predicate { atoms: Vec::new() }
    }

    pub fn eval(&self, g: &Graph) -> bool {
        self.atoms.iter().all(|a| a.eval(g))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "any");
        }
        let parts: Vec<String> = self.atoms.iter().map(Atom::to_string).collect();
        write!(f, "{}", parts.join(" & "))
    }
}

impl FromStr for Predicate {
    type Err = PredicateError;
    fn from_str(s: &str) -> Result<Self, PredicateError> {
        let atoms = s
            .split(['&', '∧'])
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Atom>, _>>()?;
        Ok(Predicate { atoms: atoms.into_iter().filter(|a| *a != Atom::Any).collect() })
    }
}

/// Random graph models. Ranges are inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum RandomModel {
    /// Independent edges, order and edge probability drawn per sample.
    Gnp { n: (usize, usize), p: (f64, f64) },
    /// Line graph of a random `G(m, p)`, kept when its order fits `n`.
    LineGraph { root: (usize, usize), p: (f64, f64), n: (usize, usize) },
    /// Pairs visited in random order; each is kept with probability `keep`
    /// when the graph stays claw-free.
    ClawFreeGrowth { n: (usize, usize), keep: (f64, f64) },
}

fn draw_usize(rng: &mut ChaCha8Rng, (lo, hi): (usize, usize)) -> usize {
    rng.gen_range(lo..=hi.max(lo))
}

fn draw_f64(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if hi > lo {
        rng.gen_range(lo..=hi)
    } else {
        lo
    }
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("in range")
}

pub fn line_graph(root: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = root.edges().collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::new(edges.len(), out).expect("line graphs of small roots fit")
}

impl RandomModel {
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Graph {
        match *self {
            RandomModel::Gnp { n, p } => {
                let n = draw_usize(rng, n);
                let p = draw_f64(rng, p);
                gnp(rng, n, p)
            }
            RandomModel::LineGraph { root, p, n } => loop {
                let m = draw_usize(rng, root);
                let q = draw_f64(rng, p);
                let h = gnp(rng, m, q);
                if (n.0..=n.1).contains(&h.edge_count()) {
                    return line_graph(&h);
                }
            },
            RandomModel::ClawFreeGrowth { n, keep } => {
                let n = draw_usize(rng, n);
                let q = draw_f64(rng, keep);
                let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                pairs.shuffle(rng);
                let mut g = Graph::empty(n);
                for (u, v) in pairs {
                    if rng.gen_bool(q.clamp(0.0, 1.0)) {
                        let h = g.with_edges([(u, v)]);
                        if is_claw_free(&h) {
                            g = h;
                        }
                    }
                }
                g
            }
        }
    }
}

/// Generator for attempt `index` under `seed`: every attempt has its own
/// stream, so results do not depend on how attempts are scheduled.
pub fn attempt_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SampleStats {
    pub attempts: u64,
    pub accepted: u64,
}

impl SampleStats {
    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.accepted as f64 / self.attempts as f64
        }
    }
}

/// Lazy rejection sampler; stops after `budget` attempts.
pub struct Sampler {
    model: RandomModel,
    seed: u64,
    predicate: Predicate,
    budget: u64,
    stats: SampleStats,
}

impl Sampler {
    pub fn new(model: RandomModel, seed: u64, predicate: Predicate, budget: u64) -> Sampler {
        Sampler { model, seed, predicate, budget, stats: SampleStats::default() }
    }

    pub fn stats(&self) -> SampleStats {
        self.stats
    }
}

impl Iterator for Sampler {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.stats.attempts < self.budget {
            let mut rng = attempt_rng(self.seed, self.stats.attempts);
            self.stats.attempts += 1;
            let g = self.model.sample(&mut rng);
            if self.predicate.eval(&g) {
                self.stats.accepted += 1;
                return Some(g);
            }
        }
        None
    }
}

/// `G(n, p)` rejection sampling with a fixed order and probability.
pub fn sample_filtered(n: usize, p: f64, seed: u64, predicate: Predicate, budget: u64) -> Sampler {
    Sampler::new(RandomModel::Gnp { n: (n, n), p: (p, p) }, seed, predicate, budget)
}
