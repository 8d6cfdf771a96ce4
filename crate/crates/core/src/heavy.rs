//! Heavy vertices, heavy pairs, and the o-/f-/c-/p-heavy conditions on
//! induced copies and whole graphs.
//!
//! All thresholds are integer comparisons: a vertex is heavy when
//! `2 d(v) >= n`, a pair when `d(u) + d(v) >= n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::pattern::{induced_copies, InducedCopy, PatternKind, PatternSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeavyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("a heavy pair needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("p-heavy is only defined for the net, not {0}")]
    PHeavyNeedsNet(PatternKind),
    #[error("vertex set {0:?} does not induce a net")]
    NotANet(VertexSet),
    #[error("unknown condition {0:?} (expected free, o, f, c or p)")]
    UnknownCondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionKind {
    Free,
    OHeavy,
    FHeavy,
    CHeavy,
    /// Only meaningful for the net.
    NPHeavy,
}

impl fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionKind::Free => "free",
            ConditionKind::OHeavy => "o-heavy",
            ConditionKind::FHeavy => "f-heavy",
            ConditionKind::CHeavy => "c-heavy",
            ConditionKind::NPHeavy => "p-heavy",
        })
    }
}

impl FromStr for ConditionKind {
    type Err = HeavyError;
    fn from_str(s: &str) -> Result<Self, HeavyError> {
        match s.to_ascii_lowercase().as_str() {
            "free" => Ok(ConditionKind::Free),
            "o" | "o-heavy" => Ok(ConditionKind::OHeavy),
            "f" | "f-heavy" => Ok(ConditionKind::FHeavy),
            "c" | "c-heavy" => Ok(ConditionKind::CHeavy),
            "p" | "p-heavy" => Ok(ConditionKind::NPHeavy),
            _ => Err(HeavyError::UnknownCondition(s.to_string())),
        }
    }
}

pub fn is_heavy_vertex(g: &Graph, v: usize) -> Result<bool, HeavyError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() }.into());
    }
    Ok(2 * g.degree(v) >= g.order())
}

pub fn is_heavy_pair(g: &Graph, u: usize, v: usize) -> Result<bool, HeavyError> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(GraphError::VertexOutOfRange { vertex: w, order: g.order() }.into());
        }
    }
    if u == v {
        return Err(HeavyError::SameVertex(u));
    }
    Ok(!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= g.order())
}

/// Degrees and the heavy-vertex set of one host graph, computed once and
/// shared by every per-copy predicate.
#[derive(Debug, Clone)]
pub struct HeavyProfile {
    pub order: usize,
    pub degrees: Vec<usize>,
    pub heavy: VertexSet,
}

impl HeavyProfile {
    pub fn new(g: &Graph) -> HeavyProfile {
        let degrees = g.degrees();
        let heavy = (0..g.order()).filter(|&v| 2 * degrees[v] >= g.order()).collect();
        HeavyProfile { order: g.order(), degrees, heavy }
    }

    #[inline]
    pub fn sum_at_least_n(&self, u: usize, v: usize) -> bool {
        self.degrees[u] + self.degrees[v] >= self.order
    }

    #[inline]
    pub fn is_heavy_pair(&self, g: &Graph, u: usize, v: usize) -> bool {
        u != v && !g.has_edge(u, v) && self.sum_at_least_n(u, v)
    }

    /// Does the host have any heavy pair at all?
    pub fn has_heavy_pair(&self, g: &Graph) -> bool {
        (0..self.order).any(|u| {
            let non = g.vertices() - g.neighbors(u) - VertexSet::singleton(u);
            non.iter().any(|v| v > u && self.sum_at_least_n(u, v))
        })
    }
}

/// The copy contains a heavy pair of the host.
pub fn copy_is_o_heavy(g: &Graph, copy: VertexSet) -> bool {
    copy_is_o_heavy_with(g, &HeavyProfile::new(g), copy)
}

pub fn copy_is_o_heavy_with(g: &Graph, p: &HeavyProfile, copy: VertexSet) -> bool {
    copy.iter().any(|u| (copy - g.neighbors(u)).iter().any(|v| v > u && p.sum_at_least_n(u, v)))
}

/// Every pair at distance two inside the copy has a heavy member.
pub fn copy_is_f_heavy(g: &Graph, copy: VertexSet) -> bool {
    copy_is_f_heavy_with(g, &HeavyProfile::new(g), copy)
}

pub fn copy_is_f_heavy_with(g: &Graph, p: &HeavyProfile, copy: VertexSet) -> bool {
    let light = copy - p.heavy;
    light.iter().all(|u| {
        // light partners at distance exactly two inside the copy
        let mut second = VertexSet::EMPTY;
        for w in g.neighbors(u) & copy {
            second = second | g.neighbors(w);
        }
        let at_two = (second & copy) - g.neighbors(u) - VertexSet::singleton(u);
        (at_two & light).is_empty()
    })
}

/// For every maximal clique `C` of the copy, each component of the copy
/// minus `C` with at least two vertices contains a heavy vertex.
pub fn copy_is_c_heavy(g: &Graph, copy: VertexSet) -> bool {
    copy_is_c_heavy_with(g, &HeavyProfile::new(g), copy)
}

pub fn copy_is_c_heavy_with(g: &Graph, p: &HeavyProfile, copy: VertexSet) -> bool {
    g.maximal_cliques_within(copy).into_iter().all(|clique| {
        g.components_within(copy - clique).into_iter().all(|comp| comp.len() < 2 || comp.intersects(p.heavy))
    })
}

/// Role assignment for an induced net: the triangle `[a, b, c]` and the
/// pendant partner of each corner, `[a1, b1, c1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetRoles {
    pub triangle: [usize; 3],
    pub pendants: [usize; 3],
}

pub fn net_roles(g: &Graph, copy: VertexSet) -> Result<NetRoles, HeavyError> {
    let not_net = || HeavyError::NotANet(copy);
    if copy.len() != 6 {
        return Err(not_net());
    }
    let mut triangle = None;
    for clique in g.maximal_cliques_within(copy) {
        match clique.len() {
            2 => {}
            3 if triangle.is_none() => triangle = Some(clique),
            _ => return Err(not_net()),
        }
    }
    let tri = triangle.ok_or_else(not_net)?;
    let corners: Vec<usize> = tri.to_vec();
    let mut pendants = [0; 3];
    let mut used = VertexSet::EMPTY;
    for (i, &c) in corners.iter().enumerate() {
        let outside = g.neighbors(c) & (copy - tri);
        if outside.len() != 1 {
            return Err(not_net());
        }
        let p = outside.first().expect("one vertex");
        // each pendant is adjacent to its corner only
        if (g.neighbors(p) & copy) != VertexSet::singleton(c) || used.contains(p) {
            return Err(not_net());
        }
        used.insert(p);
        pendants[i] = p;
    }
    Ok(NetRoles { triangle: [corners[0], corners[1], corners[2]], pendants })
}

/// Two vertices of the net whose degree sum reaches `n`, other than a
/// corner together with its own pendant. Adjacency is not required.
pub fn copy_is_p_heavy_net(g: &Graph, copy: VertexSet) -> Result<bool, HeavyError> {
    copy_is_p_heavy_net_with(g, &HeavyProfile::new(g), copy)
}

pub fn copy_is_p_heavy_net_with(g: &Graph, p: &HeavyProfile, copy: VertexSet) -> Result<bool, HeavyError> {
    let roles = net_roles(g, copy)?;
    let matched = |u: usize, v: usize| {
        (0..3).any(|i| {
            let (t, q) = (roles.triangle[i], roles.pendants[i]);
            (u == t && v == q) || (u == q && v == t)
        })
    };
    Ok(copy.iter().any(|u| copy.iter().any(|v| v > u && !matched(u, v) && p.sum_at_least_n(u, v))))
}

/// Per-copy evaluation of a condition. `Free` fails on every copy.
pub fn copy_satisfies(g: &Graph, p: &HeavyProfile, copy: VertexSet, kind: ConditionKind) -> Result<bool, HeavyError> {
    Ok(match kind {
        ConditionKind::Free => false,
        ConditionKind::OHeavy => copy_is_o_heavy_with(g, p, copy),
        ConditionKind::FHeavy => copy_is_f_heavy_with(g, p, copy),
        ConditionKind::CHeavy => copy_is_c_heavy_with(g, p, copy),
        ConditionKind::NPHeavy => copy_is_p_heavy_net_with(g, p, copy)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub satisfied: bool,
    /// First violating copy in enumeration order.
    pub witness: Option<InducedCopy>,
}

/// `true` iff every induced copy of `pattern` in `g` passes the per-copy
/// predicate for `kind`.
pub fn graph_satisfies(g: &Graph, pattern: &PatternSpec, kind: ConditionKind) -> Result<Verdict, HeavyError> {
    if kind == ConditionKind::NPHeavy && !pattern.kind.is_net() {
        return Err(HeavyError::PHeavyNeedsNet(pattern.kind));
    }
    let profile = HeavyProfile::new(g);
    for copy in induced_copies(g, pattern) {
        if !copy_satisfies(g, &profile, copy.vertices, kind)? {
            return Ok(Verdict { satisfied: false, witness: Some(copy) });
        }
    }
    Ok(Verdict { satisfied: true, witness: None })
}

/// Boolean form of [`graph_satisfies`] for hot loops; panics on an
/// incompatible pattern/condition pair.
pub fn satisfies(g: &Graph, pattern: &PatternSpec, kind: ConditionKind) -> bool {
    graph_satisfies(g, pattern, kind).expect("compatible pattern and condition").satisfied
}

/// Claw-o-heavy: every induced claw holds a heavy pair among its leaves.
pub fn is_claw_o_heavy(g: &Graph) -> bool {
    let p = HeavyProfile::new(g);
    (0..g.order()).all(|v| {
        let nv = g.neighbors(v);
        nv.iter().all(|x| {
            let rest = nv - g.neighbors(x) - VertexSet::singleton(x);
            rest.iter().filter(|&y| y > x).all(|y| {
                let third = rest - g.neighbors(y) - VertexSet::singleton(y);
                third
                    .iter()
                    .filter(|&z| z > y)
                    .all(|z| p.is_heavy_pair(g, x, y) || p.is_heavy_pair(g, x, z) || p.is_heavy_pair(g, y, z))
            })
        })
    })
}

/// Whether an implication arrow is part of the diagram or is an
/// alternative reading kept for comparison only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Transcription {
    Drawn,
    /// Outside the diagram; checked in report-only mode.
    Alternative,
}

/// "Every `from`-heavy graph is `to`-heavy" for the given condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: PatternKind,
    pub to: PatternKind,
    pub condition: ConditionKind,
    pub transcription: Transcription,
}

const fn arrow(from: PatternKind, to: PatternKind, condition: ConditionKind) -> Arrow {
    Arrow { from, to, condition, transcription: Transcription::Drawn }
}

const fn alt(from: PatternKind, to: PatternKind, condition: ConditionKind) -> Arrow {
    Arrow { from, to, condition, transcription: Transcription::Alternative }
}

use ConditionKind::{CHeavy, FHeavy};
use PatternKind::{Bull as B, Cycle, Net as N, Path, Wounded as W, Z};

const P3: PatternKind = Path(3);
const P4: PatternKind = Path(4);
const P5: PatternKind = Path(5);
const P6: PatternKind = Path(6);
const C3: PatternKind = Cycle(3);

/// Implications among f-heavy conditions, one entry per drawn arrow.
pub const F_HEAVY_ARROWS: &[Arrow] = &[
    arrow(P3, P4, FHeavy),
    arrow(P3, W, FHeavy),
    arrow(P3, Z(1), FHeavy),
    arrow(P4, P5, FHeavy),
    arrow(P4, Z(2), FHeavy),
    arrow(P4, N, FHeavy),
    arrow(P5, P6, FHeavy),
    arrow(P5, Z(3), FHeavy),
    arrow(P6, C3, FHeavy),
    arrow(Z(1), B, FHeavy),
    arrow(B, N, FHeavy),
    arrow(N, C3, FHeavy),
    arrow(W, C3, FHeavy),
    arrow(Z(2), C3, FHeavy),
    arrow(Z(3), C3, FHeavy),
];

/// Implications among c-heavy conditions. `C3 <-> P3` is drawn with two
/// heads and appears twice. The alternative entries are readings that do
/// not match the drawn arrows.
pub const C_HEAVY_ARROWS: &[Arrow] = &[
    arrow(Z(1), B, CHeavy),
    arrow(B, N, CHeavy),
    arrow(P4, P5, CHeavy),
    arrow(P5, P6, CHeavy),
    arrow(P4, B, CHeavy),
    arrow(P5, W, CHeavy),
    arrow(Z(2), W, CHeavy),
    arrow(W, C3, CHeavy),
    arrow(N, C3, CHeavy),
    arrow(P6, C3, CHeavy),
    arrow(Z(3), C3, CHeavy),
    arrow(C3, P3, CHeavy),
    arrow(P3, C3, CHeavy),
    alt(W, Z(3), CHeavy),
    alt(Z(1), P4, CHeavy),
    alt(P5, Z(2), CHeavy),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::make_pattern;

    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn heavy_vertex_examples() {
        assert!(is_heavy_vertex(&Graph::complete(4), 0).unwrap());
        assert!(!is_heavy_vertex(&Graph::path(5), 2).unwrap());
        assert!(is_heavy_vertex(&Graph::cycle(4), 1).unwrap());
        assert!(is_heavy_vertex(&Graph::cycle(4), 9).is_err());
    }

    #[test]
    fn heavy_pair_examples() {
        // vertices 2,3,4 of K_{2,3} have degree 2; 0 and 1 have degree 3
        assert!(is_heavy_pair(&k23(), 0, 1).unwrap());
        assert!(!is_heavy_pair(&Graph::cycle(6), 0, 3).unwrap());
        assert!(!is_heavy_pair(&Graph::complete(4), 0, 1).unwrap());
        assert_eq!(is_heavy_pair(&Graph::complete(4), 2, 2), Err(HeavyError::SameVertex(2)));
    }

    #[test]
    fn o_heavy_copies() {
        let g = k23();
        // claw centred at degree-3 vertex 0 with leaves 2,3,4: leaf pairs sum to 4 < 5
        assert!(!copy_is_o_heavy(&g, VertexSet::from_iter([0, 2, 3, 4])));
        assert!(copy_is_o_heavy(&Graph::cycle(4), VertexSet::from_iter([0, 1, 2])));
        assert!(!copy_is_o_heavy(&Graph::complete(5), VertexSet::from_iter([0, 1, 2])));
    }

    #[test]
    fn f_heavy_copies() {
        assert!(copy_is_f_heavy(&Graph::complete(5), VertexSet::from_iter([0, 1, 2])));
        // claw in a large sparse host: nothing heavy
        let host = Graph::new(8, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!copy_is_f_heavy(&host, VertexSet::from_iter([0, 1, 2, 3])));
        // P4 0-1-2-3 where only 0 and 1 are heavy: the distance-2 pairs are
        // (0,2) and (1,3) and each holds a heavy vertex.
        let host = Graph::new(6, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5)]).unwrap();
        let p = HeavyProfile::new(&host);
        assert_eq!(p.heavy, VertexSet::from_iter([0, 1]));
        let copy = VertexSet::from_iter([0, 1, 2, 3]);
        let brute = copy.iter().all(|u| {
            copy.iter().all(|v| {
                u >= v || host.distance_within(copy, u, v) != Some(2) || p.heavy.contains(u) || p.heavy.contains(v)
            })
        });
        assert!(brute);
        assert!(copy_is_f_heavy(&host, copy));
    }

    #[test]
    fn c_heavy_vacuous_patterns() {
        let host = Graph::new(9, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        for spec in [PatternKind::Claw, PatternKind::Complete(3), PatternKind::Star(3)] {
            let spec = make_pattern(spec).unwrap();
            for copy in induced_copies(&host, &spec) {
                assert!(copy_is_c_heavy(&host, copy.vertices));
            }
        }
    }

    #[test]
    fn net_copy_without_heavy_vertices_is_not_c_heavy() {
        let net = make_pattern(PatternKind::Net).unwrap();
        // net plus isolated vertices so that nothing is heavy
        let host = Graph::new(12, net.graph.edges()).unwrap();
        let copy = VertexSet::full(6);
        assert!(HeavyProfile::new(&host).heavy.is_empty());
        // oracle: remove the pendant edge a-a1 and the path b1-b-c-c1 remains
        let a = net.role_vertex("a").unwrap();
        let a1 = net.role_vertex("a1").unwrap();
        let rest = copy.without(a).without(a1);
        assert_eq!(host.components_within(rest).len(), 1);
        assert!(!copy_is_c_heavy(&host, copy));
    }

    #[test]
    fn p_heavy_examples() {
        let net = make_pattern(PatternKind::Net).unwrap();
        let (a, b) = (net.role_vertex("a").unwrap(), net.role_vertex("b").unwrap());
        // make a and b heavy by attaching a shared blob of extra vertices
        let mut edges: Vec<(usize, usize)> = net.graph.edges().collect();
        for x in 6..9 {
            edges.push((a, x));
            edges.push((b, x));
        }
        let host = Graph::new(10, edges).unwrap();
        assert!(is_heavy_vertex(&host, a).unwrap() && is_heavy_vertex(&host, b).unwrap());
        assert!(copy_is_p_heavy_net(&host, VertexSet::full(6)).unwrap());

        let sparse = Graph::new(14, net.graph.edges()).unwrap();
        assert!(!copy_is_p_heavy_net(&sparse, VertexSet::full(6)).unwrap());
        assert!(copy_is_p_heavy_net(&sparse, VertexSet::full(5)).is_err());
    }

    #[test]
    fn net_roles_resolve() {
        let net = make_pattern(PatternKind::Net).unwrap();
        let r = net_roles(&net.graph, VertexSet::full(6)).unwrap();
        assert_eq!(r.triangle, [0, 1, 2]);
        let names: Vec<&str> = r.pendants.iter().map(|&p| net.roles[p].as_str()).collect();
        assert_eq!(names, ["a1", "b1", "c1"]);
    }

    #[test]
    fn graph_level_examples() {
        let claw = make_pattern(PatternKind::Claw).unwrap();
        for kind in [ConditionKind::Free, ConditionKind::OHeavy, ConditionKind::FHeavy, ConditionKind::CHeavy] {
            assert!(graph_satisfies(&Graph::cycle(7), &claw, kind).unwrap().satisfied);
        }
        let net = make_pattern(PatternKind::Net).unwrap();
        assert!(graph_satisfies(&Graph::cycle(7), &net, ConditionKind::NPHeavy).unwrap().satisfied);
        assert!(matches!(
            graph_satisfies(&Graph::cycle(7), &claw, ConditionKind::NPHeavy),
            Err(HeavyError::PHeavyNeedsNet(_))
        ));
        // all vertices heavy: f-heavy for any pattern
        let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let p3 = make_pattern(PatternKind::Path(3)).unwrap();
        assert!(graph_satisfies(&k33, &p3, ConditionKind::FHeavy).unwrap().satisfied);
        let v = graph_satisfies(&k33, &p3, ConditionKind::Free).unwrap();
        assert!(!v.satisfied && v.witness.is_some());
    }

    #[test]
    fn claw_o_heavy_matches_generic_route() {
        let claw = make_pattern(PatternKind::Claw).unwrap();
        for bits in 0u64..1 << 10 {
            let g = crate::families::labeled_graph(5, bits);
            assert_eq!(is_claw_o_heavy(&g), satisfies(&g, &claw, ConditionKind::OHeavy));
        }
    }
}
