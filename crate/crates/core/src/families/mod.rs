//! Named graphs and parametric families, exhaustive labeled enumeration,
//! and seeded random samplers.

mod pfamily;
mod random;
mod witnesses;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::pattern::{make_pattern, PatternError, PatternKind};

pub use pfamily::{find_induced_p_member, gen_p_family, l1, l2, p_family_grid, PConnector, PWitness};
pub use random::{
    attempt_rng, line_graph, sample_filtered, Atom, Predicate, PredicateError, RandomModel, SampleStats, Sampler,
};
pub use witnesses::{
    build_g1, build_g2, build_g3, build_g4, checked, gen_g1, gen_g2, gen_g3, gen_g4, Claim, G2Variant,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("{family}: claim failed: {claim}")]
    ClaimFailed { family: String, claim: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("labeled enumeration supports n <= 7, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn invalid(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter { family: family.to_string(), reason: reason.into() }
}

/// A generated graph with a name for every vertex, plus the claims that
/// were checked while building it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    pub claims: Vec<Claim>,
}

impl FamilyGraph {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertex ids of the given labels; panics on an unknown label.
    pub fn vertices_of(&self, labels: &[&str]) -> Vec<usize> {
        labels.iter().map(|l| self.vertex(l).unwrap_or_else(|| panic!("{}: no vertex {l}", self.name))).collect()
    }

    /// Required claims that do not hold.
    pub fn failed_claims(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.required && !c.holds)
    }
}

/// Incremental builder for labeled graphs.
#[derive(Default)]
pub(crate) struct Labeled {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Labeled {
    pub(crate) fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    pub(crate) fn join(&mut self, u: usize, vs: &[usize]) {
        for &v in vs {
            self.edge(u, v);
        }
    }

    pub(crate) fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    pub(crate) fn path(&mut self, vs: &[usize]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    pub(crate) fn finish(self, name: impl Into<String>) -> FamilyGraph {
        let graph = Graph::new(self.labels.len(), self.edges).expect("generated graphs are simple");
        FamilyGraph { name: name.into(), graph, labels: self.labels, claims: Vec::new() }
    }
}

/// Number of vertex pairs, i.e. bits in a labeled-graph index.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph whose edge set is given by `bits`, one bit per pair
/// in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn labeled_graph(n: usize, bits: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(adj)
}

/// Every labeled graph on `n <= 7` vertices passing `keep`, in index order.
pub fn enumerate_labeled<F>(n: usize, keep: F) -> Result<impl Iterator<Item = Graph>, FamilyError>
where
    F: Fn(&Graph) -> bool,
{
    if n > 7 {
        return Err(FamilyError::TooLarge(n));
    }
    Ok((0u64..1 << pair_count(n)).map(move |bits| labeled_graph(n, bits)).filter(move |g| keep(g)))
}

pub fn petersen() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, e).expect("valid")
}

/// A family name with its parameters, as accepted by `gen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    L1,
    L2,
    Petersen,
    PFamily([PConnector; 3]),
    G1 { r: usize },
    G2 { k: usize, r: usize, variant: G2Variant },
    G3 { t: usize, r: usize },
    G4 { r: usize },
    Pattern(PatternKind),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::L1 => write!(f, "L1"),
            FamilySpec::L2 => write!(f, "L2"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::PFamily([a, b, c]) => write!(f, "P({a},{b},{c})"),
            FamilySpec::G1 { r } => write!(f, "G1(r={r})"),
            FamilySpec::G2 { k, r, variant } => write!(f, "G2(k={k},r={r},{variant})"),
            FamilySpec::G3 { t, r } => write!(f, "G3(t={t},r={r})"),
            FamilySpec::G4 { r } => write!(f, "G4(r={r})"),
            FamilySpec::Pattern(p) => write!(f, "{p}"),
        }
    }
}

/// One line of the `gen --list` catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub constraint: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "l1", params: "", constraint: "9 vertices, equals pfam T,T,T" },
    CatalogEntry { name: "l2", params: "", constraint: "9 vertices, equals pfam 3,T,T" },
    CatalogEntry { name: "petersen", params: "", constraint: "10 vertices" },
    CatalogEntry { name: "pfam", params: "x1,x2,x3", constraint: "each T or an integer >= 3" },
    CatalogEntry { name: "g1", params: "r", constraint: "r >= 3" },
    CatalogEntry { name: "g2", params: "k,r[,variant]", constraint: "k+3 <= r <= 2k-2; variant embedded|outside" },
    CatalogEntry { name: "g3", params: "t,r", constraint: "t >= 2, r >= 4t" },
    CatalogEntry { name: "g4", params: "r", constraint: "r >= 8" },
    CatalogEntry {
        name: "<pattern>",
        params: "",
        constraint:
            "P<i>, C<i>, K<i>, S<k>, Z<i>, B<ij>, N<ijk>, B(i,j), N(i,j,k), claw, bull, net, wounded, hourglass, K112",
    },
];

impl FamilySpec {
    /// Parses a family name and a `key=value,...` parameter list.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec, FamilyError> {
        let mut map = BTreeMap::new();
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) =
                part.split_once('=').ok_or_else(|| invalid(name, format!("parameter {part:?} is not key=value")))?;
            map.insert(k.trim().to_ascii_lowercase(), v.trim().to_string());
        }
        let num = |key: &str| -> Result<usize, FamilyError> {
            let raw = map.get(key).ok_or_else(|| invalid(name, format!("missing parameter {key}")))?;
            raw.parse().map_err(|_| invalid(name, format!("{key}={raw} is not a number")))
        };
        let lower = name.to_ascii_lowercase();
        let spec = match lower.as_str() {
            "l1" => FamilySpec::L1,
            "l2" => FamilySpec::L2,
            "petersen" => FamilySpec::Petersen,
            "pfam" | "p" => {
                let mut xs = [PConnector::Triangle; 3];
                for (i, slot) in xs.iter_mut().enumerate() {
                    let key = format!("x{}", i + 1);
                    let raw = map.get(&key).ok_or_else(|| invalid(name, format!("missing parameter {key}")))?;
                    *slot = raw.parse().map_err(|e: FamilyError| e)?;
                }
                FamilySpec::PFamily(xs)
            }
            "g1" => FamilySpec::G1 { r: num("r")? },
            "g2" => {
                let variant = match map.get("variant") {
                    None => G2Variant::default(),
                    Some(v) => v.parse()?,
                };
                FamilySpec::G2 { k: num("k")?, r: num("r")?, variant }
            }
            "g3" => FamilySpec::G3 { t: num("t")?, r: num("r")? },
            "g4" => FamilySpec::G4 { r: num("r")? },
            _ => match name.parse::<PatternKind>() {
                Ok(kind) => FamilySpec::Pattern(kind),
                Err(_) => return Err(FamilyError::UnknownFamily(name.to_string())),
            },
        };
        Ok(spec)
    }

    /// Builds the graph and fails if a required claim does not hold.
    pub fn build(&self) -> Result<FamilyGraph, FamilyError> {
        witnesses::checked(self.build_unchecked()?)
    }

    /// Builds the graph with its claims evaluated but not enforced.
    pub fn build_unchecked(&self) -> Result<FamilyGraph, FamilyError> {
        match *self {
            FamilySpec::L1 => gen_p_family(PConnector::parse_triple("T,T,T")?).map(|mut f| {
                f.name = "L1".into();
                f
            }),
            FamilySpec::L2 => gen_p_family(PConnector::parse_triple("3,T,T")?).map(|mut f| {
                f.name = "L2".into();
                f
            }),
            FamilySpec::Petersen => {
                let graph = petersen();
                let labels = (0..10).map(|v| v.to_string()).collect();
                Ok(FamilyGraph { name: "petersen".into(), graph, labels, claims: Vec::new() })
            }
            FamilySpec::PFamily(xs) => gen_p_family(xs),
            FamilySpec::G1 { r } => build_g1(r),
            FamilySpec::G2 { k, r, variant } => build_g2(k, r, variant),
            FamilySpec::G3 { t, r } => build_g3(t, r),
            FamilySpec::G4 { r } => build_g4(r),
            FamilySpec::Pattern(kind) => {
                let p = make_pattern(kind)?;
                Ok(FamilyGraph { name: kind.to_string(), graph: p.graph, labels: p.roles, claims: Vec::new() })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_enumeration_counts() {
        assert_eq!(enumerate_labeled(3, |_| true).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(0, |_| true).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(2, |g| crate::cycles::is_hamiltonian(g).unwrap()).unwrap().count(), 0);
        assert!(enumerate_labeled(8, |_| true).is_err());
    }

    #[test]
    fn two_connected_count_matches_recount() {
        let naive = |g: &Graph| {
            g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.is_connected_within(g.vertices().without(v)))
        };
        let fast = enumerate_labeled(4, Graph::is_two_connected).unwrap().count();
        let slow = enumerate_labeled(4, naive).unwrap().count();
        assert_eq!(fast, slow);
        // C4 in 3 labelings, K4 minus an edge in 6, K4 once
        assert_eq!(fast, 10);
    }

    #[test]
    fn labeled_graph_bit_order() {
        assert_eq!(labeled_graph(3, 0b001).edges().collect::<Vec<_>>(), [(0, 1)]);
        assert_eq!(labeled_graph(3, 0b010).edges().collect::<Vec<_>>(), [(0, 2)]);
        assert_eq!(labeled_graph(3, 0b100).edges().collect::<Vec<_>>(), [(1, 2)]);
        assert_eq!(labeled_graph(4, 1 << 3).edges().collect::<Vec<_>>(), [(0, 3)]);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(FamilySpec::parse("g1", "r=5").unwrap(), FamilySpec::G1 { r: 5 });
        assert_eq!(
            FamilySpec::parse("pfam", "x1=3,x2=T,x3=t").unwrap(),
            FamilySpec::PFamily([PConnector::Path(3), PConnector::Triangle, PConnector::Triangle])
        );
        assert_eq!(FamilySpec::parse("N111", "").unwrap(), FamilySpec::Pattern(PatternKind::Nijk(1, 1, 1)));
        assert!(FamilySpec::parse("g1", "").is_err());
        assert!(FamilySpec::parse("g9", "").is_err());
        assert!(FamilySpec::parse("g1", "r").is_err());
        assert_eq!(FamilySpec::parse("L1", "").unwrap().build().unwrap().graph, l1());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(g.to_graph6(), "IheA@GUAo");
    }
}
