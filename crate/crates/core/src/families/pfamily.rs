//! Two disjoint triangles joined coordinate-wise by induced paths or by
//! triangles, and the search for such a structure as an induced subgraph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{invalid, FamilyError, FamilyGraph, Labeled};
use crate::graph::{Graph, VertexSet};
use crate::pattern::InducedCopy;

/// How `a_i` is joined to `b_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PConnector {
    /// The edge `a_i b_i` plus one vertex adjacent to both.
    Triangle,
    /// An induced path on `k >= 3` vertices, endpoints included.
    Path(usize),
}

impl PConnector {
    /// Vertices the connector adds beyond `a_i` and `b_i`.
    pub fn extra_vertices(self) -> usize {
        match self {
            PConnector::Triangle => 1,
            PConnector::Path(k) => k - 2,
        }
    }

    pub fn parse_triple(s: &str) -> Result<[PConnector; 3], FamilyError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(invalid("pfam", format!("expected three connectors, got {s:?}")));
        }
        Ok([parts[0].parse()?, parts[1].parse()?, parts[2].parse()?])
    }
}

impl fmt::Display for PConnector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PConnector::Triangle => write!(f, "T"),
            PConnector::Path(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for PConnector {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        if s.eq_ignore_ascii_case("t") {
            return Ok(PConnector::Triangle);
        }
        match s.parse::<usize>() {
            Ok(k) if k >= 3 => Ok(PConnector::Path(k)),
            _ => Err(invalid("pfam", format!("connector {s:?} must be T or an integer >= 3"))),
        }
    }
}

/// Vertices are `a1 a2 a3 b1 b2 b3` first, then each connector's extra
/// vertices from the `a` side to the `b` side.
pub fn gen_p_family(xs: [PConnector; 3]) -> Result<FamilyGraph, FamilyError> {
    if let Some(bad) = xs.iter().find(|x| matches!(x, PConnector::Path(k) if *k < 3)) {
        return Err(invalid("pfam", format!("connector {bad} is shorter than 3")));
    }
    let order = 6 + xs.iter().map(|x| x.extra_vertices()).sum::<usize>();
    if order > crate::graph::MAX_ORDER {
        return Err(invalid("pfam", format!("order {order} exceeds 64")));
    }
    let mut b = Labeled::default();
    let a: Vec<usize> = (1..=3).map(|i| b.vertex(format!("a{i}"))).collect();
    let bb: Vec<usize> = (1..=3).map(|i| b.vertex(format!("b{i}"))).collect();
    b.clique(&a);
    b.clique(&bb);
    for (i, x) in xs.iter().enumerate() {
        match *x {
            PConnector::Triangle => {
                let t = b.vertex(format!("t{}", i + 1));
                b.clique(&[a[i], bb[i], t]);
            }
            PConnector::Path(k) => {
                let mut chain = vec![a[i]];
                for j in 1..=k - 2 {
                    chain.push(b.vertex(format!("p{}_{j}", i + 1)));
                }
                chain.push(bb[i]);
                b.path(&chain);
            }
        }
    }
    let [x1, x2, x3] = xs;
    Ok(b.finish(format!("P({x1},{x2},{x3})")))
}

pub fn l1() -> Graph {
    gen_p_family([PConnector::Triangle; 3]).expect("valid").graph
}

pub fn l2() -> Graph {
    gen_p_family([PConnector::Path(3), PConnector::Triangle, PConnector::Triangle]).expect("valid").graph
}

/// Every connector triple, up to reordering, whose graph has at most
/// `max_order` vertices.
pub fn p_family_grid(max_order: usize) -> Vec<[PConnector; 3]> {
    let budget = max_order.saturating_sub(6);
    let options: Vec<PConnector> =
        std::iter::once(PConnector::Triangle).chain((3..=budget + 2).map(PConnector::Path)).collect();
    let mut out = Vec::new();
    for (i, &x) in options.iter().enumerate() {
        for (j, &y) in options.iter().enumerate().skip(i) {
            for &z in options.iter().skip(j) {
                if x.extra_vertices() + y.extra_vertices() + z.extra_vertices() <= budget {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// An induced member of the family found inside a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PWitness {
    pub params: [PConnector; 3],
    /// `embedding` follows the vertex order of [`gen_p_family`].
    pub copy: InducedCopy,
}

struct Search<'a> {
    g: &'a Graph,
    a: [usize; 3],
    b: [usize; 3],
    params: [PConnector; 3],
    internals: [Vec<usize>; 3],
}

impl Search<'_> {
    fn connect(&mut self, i: usize, chosen: VertexSet) -> bool {
        if i == 3 {
            return true;
        }
        let (a, b) = (self.a[i], self.b[i]);
        if self.g.has_edge(a, b) {
            let pair = VertexSet::singleton(a).with(b);
            let cands = self.g.neighbors(a) & (self.g.neighbors(b) - chosen);
            for t in cands {
                if self.g.neighbors(t) & chosen == pair {
                    self.params[i] = PConnector::Triangle;
                    self.internals[i] = vec![t];
                    if self.connect(i + 1, chosen.with(t)) {
                        return true;
                    }
                }
            }
            false
        } else {
            let mut path = Vec::new();
            self.extend(i, a, chosen, &mut path)
        }
    }

    /// Grows an induced path from `end` towards `b[i]`; `chosen` holds every
    /// vertex placed so far, including the path's own internal vertices.
    fn extend(&mut self, i: usize, end: usize, chosen: VertexSet, path: &mut Vec<usize>) -> bool {
        let b = self.b[i];
        let cands = self.g.neighbors(end) - chosen;
        for v in cands {
            let seen = self.g.neighbors(v) & chosen;
            let closes = seen == VertexSet::singleton(end).with(b);
            if !closes && seen != VertexSet::singleton(end) {
                continue;
            }
            path.push(v);
            if closes {
                self.params[i] = PConnector::Path(path.len() + 2);
                self.internals[i] = path.clone();
                if self.connect(i + 1, chosen.with(v)) {
                    return true;
                }
            } else if self.extend(i, v, chosen.with(v), path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for w in g.neighbors(u) & g.neighbors(v) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// First induced member of the family in a fixed search order: pairs of
/// disjoint triangles, the six ways to match their corners, then
/// connectors by backtracking.
pub fn find_induced_p_member(g: &Graph) -> Option<PWitness> {
    let tris = triangles(g);
    for (ti, ta) in tris.iter().enumerate() {
        let set_a: VertexSet = ta.iter().copied().collect();
        for tb in &tris[ti + 1..] {
            let set_b: VertexSet = tb.iter().copied().collect();
            if set_a.intersects(set_b) {
                continue;
            }
            for perm in PERMS {
                let a = *ta;
                let b = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                let crossing_ok = (0..3).all(|i| (0..3).all(|j| i == j || !g.has_edge(a[i], b[j])));
                if !crossing_ok {
                    continue;
                }
                let mut s = Search { g, a, b, params: [PConnector::Triangle; 3], internals: Default::default() };
                if s.connect(0, set_a | set_b) {
                    let mut embedding: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                    for part in &s.internals {
                        embedding.extend(part);
                    }
                    let vertices = embedding.iter().copied().collect();
                    return Some(PWitness { params: s.params, copy: InducedCopy { vertices, embedding } });
                }
            }
        }
    }
    None
}
