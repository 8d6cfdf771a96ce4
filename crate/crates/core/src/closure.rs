//! Local completions, the r- and c-closure fixpoints, and the region
//! decomposition induced by the c-closure.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::heavy::{is_claw_o_heavy, HeavyProfile};
use crate::pattern::{is_claw_free, is_k112_free};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    R,
    C,
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureKind::R => "r",
            ClosureKind::C => "c",
        })
    }
}

impl FromStr for ClosureKind {
    type Err = ClosureError;
    fn from_str(s: &str) -> Result<Self, ClosureError> {
        match s {
            "r" | "R" => Ok(ClosureKind::R),
            "c" | "C" => Ok(ClosureKind::C),
            _ => Err(ClosureError::BadArgument(format!("closure kind {s:?} (expected r or c)"))),
        }
    }
}

/// Which eligible vertex to complete next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Policy {
    #[default]
    Smallest,
    /// Uniform choice among the eligible vertices, seeded.
    Random(u64),
}

impl FromStr for Policy {
    type Err = ClosureError;
    fn from_str(s: &str) -> Result<Self, ClosureError> {
        if s == "smallest" {
            return Ok(Policy::Smallest);
        }
        s.strip_prefix("random:")
            .and_then(|seed| seed.parse().ok())
            .map(Policy::Random)
            .ok_or_else(|| ClosureError::BadArgument(format!("policy {s:?} (expected smallest or random:<seed>)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("r-closure needs a claw-free graph")]
    NotClawFree,
    #[error("c-closure needs a claw-o-heavy graph")]
    NotClawOHeavy,
    #[error("invalid {0}")]
    BadArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureStep {
    pub vertex: usize,
    pub added: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub kind: ClosureKind,
    pub steps: Vec<ClosureStep>,
}

impl ClosureTrace {
    /// The graphs after each step, starting from `g`.
    pub fn replay(&self, g: &Graph) -> Vec<Graph> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut cur = g.clone();
        for step in &self.steps {
            cur = cur.with_edges(step.added.iter().copied());
            out.push(cur.clone());
        }
        out
    }
}

/// `G[N(x)]` is connected and not complete.
pub fn r_eligible(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    !g.is_clique(nx) && g.is_connected_within(nx)
}

/// c-eligibility with heaviness measured in `g` itself.
pub fn c_eligible(g: &Graph, x: usize) -> bool {
    c_eligible_with(g, &HeavyProfile::new(g), x)
}

fn c_eligible_with(g: &Graph, p: &HeavyProfile, x: usize) -> bool {
    let nx = g.neighbors(x);
    if g.is_clique(nx) {
        return false;
    }
    // G* restricted to N(x): G plus the heavy pairs inside N(x)
    let mut star = [0u64; 64];
    for u in nx {
        let mut row = g.neighbors(u) & nx;
        for v in nx - row - VertexSet::singleton(u) {
            if p.sum_at_least_n(u, v) {
                row.insert(v);
            }
        }
        star[u] = row.bits();
    }
    let reach = |start: usize| {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | VertexSet::from_bits(star[w]);
            }
            frontier = next - seen;
            seen = seen | frontier;
        }
        seen
    };
    let first = nx.first().expect("a non-clique neighbourhood is non-empty");
    let c1 = reach(first);
    if c1 == nx {
        return true;
    }
    let c2 = nx - c1;
    let c2_comp = reach(c2.first().expect("non-empty"));
    if c2_comp != c2 {
        return false;
    }
    let is_star_clique =
        |c: VertexSet| c.iter().all(|u| (c - VertexSet::singleton(u)).is_subset(VertexSet::from_bits(star[u])));
    if !is_star_clique(c1) || !is_star_clique(c2) {
        return false;
    }
    let outside = g.vertices() - nx - VertexSet::singleton(x);
    outside.iter().any(|z| p.sum_at_least_n(x, z) && g.neighbors(z).intersects(c1) && g.neighbors(z).intersects(c2))
}

pub fn is_eligible(g: &Graph, kind: ClosureKind, x: usize) -> bool {
    match kind {
        ClosureKind::R => r_eligible(g, x),
        ClosureKind::C => c_eligible(g, x),
    }
}

pub fn eligible_vertices(g: &Graph, kind: ClosureKind) -> VertexSet {
    match kind {
        ClosureKind::R => g.vertices().iter().filter(|&x| r_eligible(g, x)).collect(),
        ClosureKind::C => {
            let p = HeavyProfile::new(g);
            g.vertices().iter().filter(|&x| c_eligible_with(g, &p, x)).collect()
        }
    }
}

/// Turns `N(x)` into a clique.
pub fn complete_at(g: &Graph, x: usize) -> Graph {
    g.with_clique(g.neighbors(x))
}

fn missing_in(g: &Graph, set: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in set {
        for v in set - g.neighbors(u) {
            if v > u {
                out.push((u, v));
            }
        }
    }
    out
}

/// Closure without checking the input class.
pub fn closure_unchecked(g: &Graph, kind: ClosureKind, policy: Policy) -> (Graph, ClosureTrace) {
    let mut rng = match policy {
        Policy::Smallest => None,
        Policy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut cur = g.clone();
    let mut steps = Vec::new();
    loop {
        let eligible = eligible_vertices(&cur, kind);
        let x = match rng.as_mut() {
            None => eligible.first(),
            Some(rng) => eligible.to_vec().choose(rng).copied(),
        };
        let Some(x) = x else { break };
        let added = missing_in(&cur, cur.neighbors(x));
        cur = complete_at(&cur, x);
        steps.push(ClosureStep { vertex: x, added });
    }
    (cur, ClosureTrace { kind, steps })
}

/// Fixpoint of completions at eligible vertices. The r-closure needs a
/// claw-free input and the c-closure a claw-o-heavy one.
pub fn closure(g: &Graph, kind: ClosureKind, policy: Policy) -> Result<(Graph, ClosureTrace), ClosureError> {
    match kind {
        ClosureKind::R if !is_claw_free(g) => Err(ClosureError::NotClawFree),
        ClosureKind::C if !is_claw_o_heavy(g) => Err(ClosureError::NotClawOHeavy),
        _ => Ok(closure_unchecked(g, kind, policy)),
    }
}

pub fn c_closure(g: &Graph) -> Result<Graph, ClosureError> {
    closure(g, ClosureKind::C, Policy::Smallest).map(|(h, _)| h)
}

pub fn r_closure(g: &Graph) -> Result<Graph, ClosureError> {
    closure(g, ClosureKind::R, Policy::Smallest).map(|(h, _)| h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexRole {
    Interior,
    Frontier,
    /// Member of more than two regions.
    Anomalous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub clique: VertexSet,
    /// `G[clique]` of the original graph, relabelled in ascending order.
    pub induced: Graph,
}

#[derive(Debug, Clone)]
pub struct RegionMap {
    pub closure: Graph,
    pub regions: Vec<Region>,
    pub membership: Vec<usize>,
    pub roles: Vec<VertexRole>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionFailure {
    Separable { region: VertexSet },
    FrontierWithoutInterior { region: VertexSet, vertex: usize },
    NoInteriorPath { region: VertexSet, u: usize, v: usize },
    Membership { vertex: usize, count: usize },
}

impl fmt::Display for RegionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionFailure::Separable { region } => write!(f, "region {region:?} is separable"),
            RegionFailure::FrontierWithoutInterior { region, vertex } => write!(
                f,
                "frontier vertex {vertex} of {region:?} has no interior neighbour and the region is not a complete interior-free block"
            ),
            RegionFailure::NoInteriorPath { region, u, v } => {
                write!(f, "no induced {u}-{v} path through the interior of {region:?}")
            }
            RegionFailure::Membership { vertex, count } => {
                write!(f, "vertex {vertex} lies in {count} regions")
            }
        }
    }
}

/// Regions are the maximal cliques of the c-closure, read back in `g`.
pub fn regions(g: &Graph) -> Result<RegionMap, ClosureError> {
    Ok(regions_of(g, c_closure(g)?))
}

/// Region decomposition from an already computed c-closure.
pub fn regions_of(g: &Graph, closure: Graph) -> RegionMap {
    let cliques = closure.maximal_cliques();
    let mut membership = vec![0; g.order()];
    for c in &cliques {
        for v in *c {
            membership[v] += 1;
        }
    }
    let roles = membership
        .iter()
        .map(|&m| match m {
            0 | 1 => VertexRole::Interior,
            2 => VertexRole::Frontier,
            _ => VertexRole::Anomalous,
        })
        .collect();
    let regions = cliques.into_iter().map(|clique| Region { clique, induced: g.induced(clique).0 }).collect();
    RegionMap { closure, regions, membership, roles }
}

impl RegionMap {
    pub fn interior(&self) -> VertexSet {
        self.roles.iter().enumerate().filter(|(_, r)| **r == VertexRole::Interior).map(|(v, _)| v).collect()
    }

    /// Checks the three structural clauses of a region against `g`, plus the
    /// two-region membership bound.
    pub fn region_failures(&self, g: &Graph) -> Vec<RegionFailure> {
        let mut out = Vec::new();
        for (vertex, &count) in self.membership.iter().enumerate() {
            if count > 2 {
                out.push(RegionFailure::Membership { vertex, count });
            }
        }
        let interior_all = self.interior();
        for region in &self.regions {
            let r = region.clique;
            if !g.is_nonseparable_within(r) {
                out.push(RegionFailure::Separable { region: r });
            }
            let interior = r & interior_all;
            let complete_without_interior = g.is_clique(r) && interior.is_empty();
            for v in r {
                if self.roles[v] == VertexRole::Frontier
                    && !g.neighbors(v).intersects(interior)
                    && !complete_without_interior
                {
                    out.push(RegionFailure::FrontierWithoutInterior { region: r, vertex: v });
                }
            }
            for u in r {
                for v in r - g.neighbors(u) {
                    if v <= u {
                        continue;
                    }
                    // a shortest path inside interior + {u, v} is induced
                    let within = interior.with(u).with(v);
                    if g.distance_within(within, u, v).is_none() {
                        out.push(RegionFailure::NoInteriorPath { region: r, u, v });
                    }
                }
            }
        }
        out
    }
}

/// Structural signature of a closed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub claw_free: bool,
    pub k112_free: bool,
    pub at_most_two_cliques_per_vertex: bool,
    /// Only evaluated for c-closures.
    pub no_heavy_pair: Option<bool>,
    pub r_closed: Option<bool>,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.claw_free
            && self.k112_free
            && self.at_most_two_cliques_per_vertex
            && self.no_heavy_pair.unwrap_or(true)
            && self.r_closed.unwrap_or(true)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.claw_free {
            out.push("claw-free");
        }
        if !self.k112_free {
            out.push("K112-free");
        }
        if !self.at_most_two_cliques_per_vertex {
            out.push("at most two maximal cliques per vertex");
        }
        if self.no_heavy_pair == Some(false) {
            out.push("no heavy pair");
        }
        if self.r_closed == Some(false) {
            out.push("r-closed");
        }
        out
    }
}

pub fn check_closed_shape(g: &Graph, kind: ClosureKind) -> ShapeReport {
    let mut count = vec![0usize; g.order()];
    for c in g.maximal_cliques() {
        for v in c {
            count[v] += 1;
        }
    }
    let c_only = |b: bool| (kind == ClosureKind::C).then_some(b);
    ShapeReport {
        claw_free: is_claw_free(g),
        k112_free: is_k112_free(g),
        at_most_two_cliques_per_vertex: count.iter().all(|&c| c <= 2),
        no_heavy_pair: c_only(!HeavyProfile::new(g).has_heavy_pair(g)),
        r_closed: c_only(eligible_vertices(g, ClosureKind::R).is_empty()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_g1, labeled_graph};

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    fn wheel5() -> Graph {
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, 5)));
        Graph::new(6, e).unwrap()
    }

    #[test]
    fn r_eligibility_examples() {
        assert!((0..6).all(|x| !r_eligible(&Graph::cycle(6), x)));
        assert!(!r_eligible(&paw(), 2));
        assert!(r_eligible(&wheel5(), 5));
    }

    #[test]
    fn completion_examples() {
        assert_eq!(complete_at(&Graph::complete(4), 1), Graph::complete(4));
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(complete_at(&star, 0), Graph::complete(4));
        let c5 = complete_at(&Graph::cycle(5), 0);
        assert_eq!(c5.edge_count(), 6);
        assert!(c5.has_edge(1, 4));
    }

    #[test]
    fn c_eligibility_examples() {
        assert!((0..6).all(|x| !c_eligible(&Graph::cycle(6), x)));
        // r-eligible vertices of claw-free graphs are c-eligible
        for bits in 0u64..1 << 10 {
            let g = labeled_graph(5, bits);
            if is_claw_free(&g) {
                for x in 0..5 {
                    assert!(!r_eligible(&g, x) || c_eligible(&g, x), "{g} at {x}");
                }
            }
        }
    }

    #[test]
    fn case_two_needs_a_heavy_partner() {
        // x = 0 sees two disjoint edges {1,2} and {3,4}; z = 5 touches both
        let base = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (5, 1), (5, 3)];
        // at n = 6 the pair {1,3} is heavy and case one applies
        assert!(c_eligible(&Graph::new(6, base).unwrap(), 0));
        // an isolated vertex makes every pair light: d(0) + d(5) = 6 < 7
        assert!(!c_eligible(&Graph::new(7, base).unwrap(), 0));
        // two pendants on z instead: d(0) + d(5) = 8 = n while {1,3} stays light
        let mut e = base.to_vec();
        e.extend([(5, 6), (5, 7)]);
        let g = Graph::new(8, e).unwrap();
        assert!(c_eligible(&g, 0));
        assert!(!r_eligible(&g, 0));
    }

    #[test]
    fn closure_fixed_points() {
        for n in 1..6 {
            for kind in [ClosureKind::R, ClosureKind::C] {
                let (h, t) = closure(&Graph::complete(n), kind, Policy::Smallest).unwrap();
                assert_eq!(h, Graph::complete(n));
                assert!(t.steps.is_empty());
            }
        }
        let (h, t) = closure(&Graph::cycle(6), ClosureKind::C, Policy::Smallest).unwrap();
        assert_eq!(h, Graph::cycle(6));
        assert!(t.steps.is_empty());
        let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(closure(&claw, ClosureKind::R, Policy::Smallest), Err(ClosureError::NotClawFree));
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(closure(&k23, ClosureKind::C, Policy::Smallest), Err(ClosureError::NotClawOHeavy));
    }

    #[test]
    fn trace_steps_stay_inside_neighbourhoods() {
        let g = wheel5();
        let (h, trace) = closure(&g, ClosureKind::R, Policy::Smallest).unwrap();
        let mut cur = g.clone();
        for step in &trace.steps {
            let nx = cur.neighbors(step.vertex);
            for &(u, v) in &step.added {
                assert!(nx.contains(u) && nx.contains(v) && !cur.has_edge(u, v));
            }
            cur = cur.with_edges(step.added.iter().copied());
        }
        assert_eq!(cur, h);
        assert_eq!(h, Graph::complete(6));
    }

    #[test]
    fn g1_closure_passes_through_the_block() {
        let fam = build_g1(5).unwrap();
        let (h, trace) = closure_unchecked(&fam.graph, ClosureKind::C, Policy::Smallest);
        let block: VertexSet = fam.graph.vertices().iter().filter(|&v| !fam.labels[v].starts_with('c')).collect();
        assert_eq!(block.len(), 12);
        let stages = trace.replay(&fam.graph);
        assert!(stages.contains(&fam.graph.with_clique(block)));
        // b_1 then sees the tail through the heavy pair {b_1, c_2}: 12 + 2 = n
        assert_eq!(h, Graph::complete(14));
    }

    #[test]
    fn region_examples() {
        let rm = regions(&Graph::complete(5)).unwrap();
        assert_eq!(rm.regions.len(), 1);
        assert!(rm.roles.iter().all(|r| *r == VertexRole::Interior));
        let rm = regions(&Graph::cycle(6)).unwrap();
        assert_eq!(rm.regions.len(), 6);
        assert!(rm.roles.iter().all(|r| *r == VertexRole::Frontier));
        assert!(rm.region_failures(&Graph::cycle(6)).is_empty());

        let fam = build_g1(5).unwrap();
        let rm = regions(&fam.graph).unwrap();
        assert_eq!(rm.regions.len(), 1);
        let big = &rm.regions[0];
        assert_eq!(big.clique.len(), 14);
        assert!(big.induced.is_nonseparable_within(big.induced.vertices()));
        assert!(rm.region_failures(&fam.graph).is_empty());
    }

    #[test]
    fn shape_examples() {
        let (h, _) = closure(&Graph::cycle(6), ClosureKind::C, Policy::Smallest).unwrap();
        assert!(check_closed_shape(&h, ClosureKind::C).passed());
        let diamond = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let report = check_closed_shape(&diamond, ClosureKind::R);
        assert!(!report.k112_free && !report.passed());
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("smallest".parse::<Policy>().unwrap(), Policy::Smallest);
        assert_eq!("random:17".parse::<Policy>().unwrap(), Policy::Random(17));
        assert!("random:x".parse::<Policy>().is_err());
    }
}
